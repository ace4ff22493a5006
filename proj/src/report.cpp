#include "r2k/report.hpp"

#include <algorithm>

namespace r2k {

std::string_view status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
  }
  return "fail";
}

bool CheckReport::passed() const noexcept { return failure_count() == 0; }

std::size_t CheckReport::failure_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [](const CheckRecord& r) { return r.status == CheckStatus::Fail; }));
}

void CheckReport::append(const CheckReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

void CaseTally::merge(CaseTally&& later) {
  cases_ += later.cases_;
  failures_.insert(failures_.end(), std::make_move_iterator(later.failures_.begin()),
                   std::make_move_iterator(later.failures_.end()));
}

void CaseTally::emit(CheckReport& report, const std::string& id, const std::string& inputs,
                     std::size_t max_witnesses) const {
  CheckRecord summary;
  summary.id = id;
  summary.inputs = inputs;
  summary.cases = cases_;
  summary.failures = failures_.size();
  summary.status = failures_.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  report.add(std::move(summary));
  const std::size_t shown = std::min(max_witnesses, failures_.size());
  for (std::size_t i = 0; i < shown; ++i) {
    CheckRecord r;
    r.id = id;
    r.inputs = failures_[i].inputs;
    r.status = CheckStatus::Fail;
    r.cases = 1;
    r.failures = 1;
    r.witness = failures_[i];
    report.add(std::move(r));
  }
}

}  // namespace r2k

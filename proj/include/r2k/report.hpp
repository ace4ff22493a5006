#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace r2k {

enum class CheckStatus { Pass, Fail, Info };

std::string_view status_name(CheckStatus s) noexcept;

/// Counterexample payload: rendered inputs and both sides of the failed identity.
struct Witness {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckRecord {
  std::string id;
  std::string inputs;
  CheckStatus status = CheckStatus::Pass;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<Witness> witness;
  std::string note;
};

struct ReportMeta {
  std::size_t rank = 1;
  std::vector<std::string> generators;
  int window = 0;
};

/// Ordered list of check outcomes. Passes overall iff no record failed;
/// Info records never affect the verdict.
struct CheckReport {
  ReportMeta meta;
  std::vector<CheckRecord> records;

  bool passed() const noexcept;
  std::size_t failure_count() const noexcept;
  void append(const CheckReport& other);
  void add(CheckRecord record) { records.push_back(std::move(record)); }
};

/// Accumulates the outcome of one family of cases (e.g. every Jacobi triple).
/// Witnesses are kept in case order so merged tallies stay deterministic.
class CaseTally {
 public:
  void pass() { ++cases_; }
  void fail(Witness w) {
    ++cases_;
    failures_.push_back(std::move(w));
  }
  void check(bool ok, const auto& make_witness) {
    if (ok)
      pass();
    else
      fail(make_witness());
  }
  /// Appends `later`, whose cases come after ours in the global order.
  void merge(CaseTally&& later);

  std::size_t cases() const noexcept { return cases_; }
  std::size_t failures() const noexcept { return failures_.size(); }

  /// One summary record, then one record per witness (at most max_witnesses).
  void emit(CheckReport& report, const std::string& id, const std::string& inputs,
            std::size_t max_witnesses = 8) const;

 private:
  std::size_t cases_ = 0;
  std::vector<Witness> failures_;
};

}  // namespace r2k

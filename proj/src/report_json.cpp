#include "r2k/report_json.hpp"

#include "r2k/error.hpp"

namespace r2k {

Json report_to_json(const CheckReport& report) {
  Json meta;
  meta["rank"] = report.meta.rank;
  meta["generators"] = report.meta.generators;
  meta["window"] = report.meta.window;
  Json checks = Json::array();
  for (const auto& r : report.records) {
    Json c;
    c["id"] = r.id;
    c["inputs"] = r.inputs;
    c["status"] = std::string(status_name(r.status));
    c["cases"] = r.cases;
    c["failures"] = r.failures;
    if (r.witness) c["witness"] = {{"inputs", r.witness->inputs}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    if (!r.note.empty()) c["note"] = r.note;
    checks.push_back(std::move(c));
  }
  Json j;
  j["meta"] = std::move(meta);
  j["checks"] = std::move(checks);
  return j;
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(ch - 'a' + 'A');
  return out;
}

std::string render_text(const CheckReport& report) {
  std::string out = "rank " + std::to_string(report.meta.rank) + ", generators [";
  for (std::size_t i = 0; i < report.meta.generators.size(); ++i)
    out += (i ? ", " : "") + report.meta.generators[i];
  out += "], window " + std::to_string(report.meta.window) + "\n";
  for (const auto& r : report.records) {
    out += upper(status_name(r.status)) + " " + r.id + " [" + std::to_string(r.cases) + " cases, " +
           std::to_string(r.failures) + " failures] " + r.inputs + "\n";
    if (r.witness && r.witness->inputs != r.inputs) out += "  at: " + r.witness->inputs + "\n";
    if (r.witness) out += "  lhs: " + r.witness->lhs + "\n  rhs: " + r.witness->rhs + "\n";
    if (!r.note.empty()) out += "  note: " + r.note + "\n";
  }
  out += report.passed() ? "overall: pass\n" : "overall: fail (" + std::to_string(report.failure_count()) + " failing records)\n";
  return out;
}

}  // namespace

std::string emit_report(const CheckReport& report, std::string_view format) {
  if (format == "json") return report_to_json(report).dump(2) + "\n";
  if (format == "text") return render_text(report);
  throw Error(ErrorCode::InvalidArgument, "unknown report format '" + std::string(format) + "'");
}

}  // namespace r2k

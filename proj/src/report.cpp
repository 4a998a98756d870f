#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "mbx/verify.hpp"

namespace mbx::verify {

namespace {

using Json = nlohmann::ordered_json;

Json quantity_json(const Quantity& q) { return Json{{"exact", q.exact}, {"approx", q.approx}}; }

Json result_json(const CheckResult& r) {
  Json j;
  j["type"] = "check";
  j["check"] = r.check;
  j["target"] = r.target;
  j["category"] = r.observation ? "observation" : "check";
  j["verdict"] = std::string(to_string(r.verdict));
  j["relation"] = r.relation;
  if (r.lhs) j["lhs"] = quantity_json(*r.lhs);
  if (r.value) j["value"] = quantity_json(*r.value);
  if (r.rhs) j["rhs"] = quantity_json(*r.rhs);
  j["reference"] = r.reference;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json counts_json(const SuiteReport& report, bool observations) {
  return Json{{"holds", report.count(Verdict::holds, observations)},
              {"fails", report.count(Verdict::fails, observations)},
              {"inapplicable", report.count(Verdict::inapplicable, observations)}};
}

std::string fixed(double seconds) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << seconds;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string shown(const std::optional<Quantity>& q) {
  if (!q) return "";
  return q->approx.empty() ? q->exact : q->approx;
}

}  // namespace

std::string to_json_lines(const SuiteReport& report) {
  std::vector<std::string> lines;
  Json header{{"type", "header"},
              {"schema", std::string(kSchema)},
              {"tool", std::string(kVersion)},
              {"title", report.title},
              {"input_digest", report.input_digest}};
  lines.push_back(header.dump());
  for (const auto& r : report.results) lines.push_back(result_json(r).dump());
  for (const auto& e : report.errors) lines.push_back(Json{{"type", "error"}, {"target", e.target}, {"message", e.message}}.dump());
  Json summary{{"type", "summary"},
               {"results", report.results.size()},
               {"checks", counts_json(report, false)},
               {"observations", counts_json(report, true)},
               {"errors", report.errors.size()},
               {"exit_code", exit_code(report)}};
  lines.push_back(summary.dump());

  std::string stable;
  for (const auto& l : lines) stable += l + "\n";
  std::string d = digest(stable);

  // Volatile fields are appended after the digest is taken.
  header["volatile"] = Json{{"timestamp", report.timestamp}};
  lines.front() = header.dump();
  summary["digest"] = d;
  summary["volatile"] = Json{{"elapsed_seconds", fixed(report.elapsed_seconds)}};
  lines.back() = summary.dump();

  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string to_csv(const SuiteReport& report) {
  std::string out = "check,target,category,verdict,lhs,value,rhs,witness,reason\n";
  for (const auto& r : report.results) {
    std::vector<std::string> cells = {r.check, r.target, r.observation ? "observation" : "check",
                                      std::string(to_string(r.verdict)), shown(r.lhs), shown(r.value), shown(r.rhs),
                                      r.witness, r.reason};
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    out += "\n";
  }
  for (const auto& e : report.errors) {
    out += "error," + csv_field(e.target) + ",error,error,,,," + csv_field(e.message) + ",\n";
  }
  return out;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  std::size_t width_check = 5, width_target = 6;
  for (const auto& r : report.results) {
    width_check = std::max(width_check, r.check.size());
    width_target = std::max(width_target, r.target.size());
  }
  for (const auto& r : report.results) {
    std::string verdict(to_string(r.verdict));
    if (r.observation) verdict = "obs:" + verdict;
    out << std::left << std::setw(17) << verdict << std::setw(static_cast<int>(width_check) + 2) << r.check
        << std::setw(static_cast<int>(width_target) + 2) << r.target << r.relation;
    std::string numbers;
    if (r.lhs) numbers += "lhs=" + shown(r.lhs);
    if (r.value) numbers += std::string(numbers.empty() ? "" : " ") + "value=" + shown(r.value);
    if (r.rhs) numbers += std::string(numbers.empty() ? "" : " ") + "rhs=" + shown(r.rhs);
    if (!numbers.empty()) out << "  [" << numbers << "]";
    if (!r.witness.empty()) out << "  at " << r.witness;
    if (!r.reason.empty()) out << "  (" << r.reason << ")";
    out << "\n";
  }
  for (const auto& e : report.errors) out << "error            " << e.target << ": " << e.message << "\n";
  out << report.results.size() << " results: " << report.count(Verdict::holds, false) << " hold, "
      << report.count(Verdict::fails, false) << " fail, " << report.count(Verdict::inapplicable, false)
      << " inapplicable; observations: " << report.count(Verdict::holds, true) << " hold, "
      << report.count(Verdict::fails, true) << " fail, " << report.count(Verdict::inapplicable, true)
      << " inapplicable; " << report.errors.size() << " errors\n";
  return out.str();
}

}  // namespace mbx::verify

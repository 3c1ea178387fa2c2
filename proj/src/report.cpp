#include "scarrays/report.hpp"

namespace sca {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "skipped";
}

Verdict verdict_of(bool ok, std::uint64_t tested) {
  if (tested == 0) return Verdict::Skipped;
  return ok ? Verdict::Pass : Verdict::Fail;
}

Verdict Report::overall() const {
  bool any_pass = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    any_pass = any_pass || c.verdict == Verdict::Pass;
  }
  return any_pass ? Verdict::Pass : Verdict::Skipped;
}

nlohmann::json rational_json(const Rational& q) {
  return {{"exact", to_string(q)}, {"decimal", to_decimal(q, 12)}};
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["config"] = config;
  j["summary"] = summary;
  j["verdict"] = to_string(overall());
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json o;
    o["name"] = c.name;
    o["params"] = c.params;
    o["pairs_tested"] = c.pairs_tested;
    o["pairs_skipped"] = c.pairs_skipped;
    o["bound"] = c.bound ? rational_json(*c.bound) : nlohmann::json(nullptr);
    o["max_observed"] = c.max_observed ? rational_json(*c.max_observed) : nlohmann::json(nullptr);
    o["verdict"] = to_string(c.verdict);
    if (!c.note.empty()) o["note"] = c.note;
    arr.push_back(std::move(o));
  }
  j["checks"] = std::move(arr);
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace sca

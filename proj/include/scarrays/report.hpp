#pragma once

#include "scarrays/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sca {

inline constexpr int kReportSchema = 1;

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct CheckResult {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t pairs_tested = 0;
  std::uint64_t pairs_skipped = 0;
  std::optional<Rational> bound;
  std::optional<Rational> max_observed;
  Verdict verdict = Verdict::Skipped;
  std::string note;
};

// Pass when it holds, Fail otherwise; Skipped when nothing was tested.
Verdict verdict_of(bool ok, std::uint64_t tested = 1);

struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json summary = nlohmann::json::object();
  std::vector<CheckResult> checks;

  // Fail beats Pass beats Skipped.
  Verdict overall() const;
  nlohmann::json to_json() const;
  std::string dump() const;
};

// {"exact": "p/q", "decimal": "..."}
nlohmann::json rational_json(const Rational& q);

}  // namespace sca

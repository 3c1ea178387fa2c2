#include "scarrays/fixtures.hpp"
#include "scarrays/suites.hpp"

#include <doctest.h>

using namespace sca;

TEST_CASE("rational values carry exact and decimal forms") {
  nlohmann::json j = rational_json(parse_rational("7.1/33"));
  CHECK(j["exact"] == "71/330");
  CHECK(j["decimal"] == "0.215151515152");
  CHECK(rational_json(rat(-1, 3))["decimal"] == "-0.333333333333");
}

TEST_CASE("verdict ordering") {
  Report r;
  CHECK(r.overall() == Verdict::Skipped);
  CheckResult a;
  a.verdict = Verdict::Pass;
  r.checks.push_back(a);
  CHECK(r.overall() == Verdict::Pass);
  CheckResult b;
  b.verdict = Verdict::Fail;
  r.checks.push_back(b);
  CHECK(r.overall() == Verdict::Fail);
  CHECK(verdict_of(true, 0) == Verdict::Skipped);
  CHECK(to_string(Verdict::Skipped) == "skipped");
}

TEST_CASE("report layout") {
  Report r;
  r.command = "check";
  r.config = {{"z", 1}, {"a", 2}};
  CheckResult c;
  c.name = "cprime";
  c.pairs_tested = 4;
  c.bound = rat(2, 3);
  c.max_observed = rat(1);
  c.verdict = Verdict::Pass;
  r.checks.push_back(c);
  std::string golden = R"({
  "checks": [
    {
      "bound": {
        "decimal": "0.666666666667",
        "exact": "2/3"
      },
      "max_observed": {
        "decimal": "1",
        "exact": "1"
      },
      "name": "cprime",
      "pairs_skipped": 0,
      "pairs_tested": 4,
      "params": {},
      "verdict": "pass"
    }
  ],
  "command": "check",
  "config": {
    "a": 2,
    "z": 1
  },
  "schema": 1,
  "summary": {},
  "verdict": "pass"
}
)";
  CHECK(r.dump() == golden);
}

TEST_CASE("check report on the commutator") {
  Report r = run_check(fixtures::commutator());
  CHECK(r.overall() == Verdict::Fail);
  CHECK(r.summary["max_piece"] == 1);
  CHECK(r.summary["symmetrized_size"] == 8);
  Report ok = run_check(fixtures::r35());
  CHECK(ok.overall() == Verdict::Pass);
}

// Runs the ten acceptance criteria, one PASS/FAIL line each. A criterion
// passes when its suite passes, the measured values match the constants
// below, the caps reach the required sizes and the run stays in its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ordsolid/suites.hpp"

using namespace ordsolid;

namespace {

struct Criterion {
  std::string suite;
  std::string description;
  double limit_seconds;
  std::function<std::string(const SuiteReport&)> extra;  // empty string when satisfied
};

std::string expect_observed(const SuiteReport& r, const std::string& key, const std::string& value) {
  const auto it = r.observations.find(key);
  if (it == r.observations.end()) return "missing observation '" + key + "'";
  if (it->second != value) return key + " = " + it->second + ", expected " + value;
  return {};
}

std::string expect_cap_at_least(const SuiteReport& r, const std::string& key, std::size_t value) {
  const auto it = r.caps.find(key);
  if (it == r.caps.end()) return "missing cap '" + key + "'";
  if (it->second < value) return "cap " + key + " = " + std::to_string(it->second) + ", need " + std::to_string(value);
  return {};
}

std::string expect_verdict(const SuiteReport& r, const std::string& check) {
  const auto* v = r.find(check);
  if (!v) return "missing verdict '" + check + "'";
  if (!v->holds) return "verdict failed: " + check;
  if (v->instances == 0) return "verdict ran no instances: " + check;
  return {};
}

/// First non-empty message among the checks.
std::string first_of(std::initializer_list<std::string> messages) {
  for (const auto& m : messages)
    if (!m.empty()) return m;
  return {};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"free-unit-counterexample", "linear extensions of f <= g are not ordered", 1,
       [](const SuiteReport& r) {
         return first_of({expect_observed(r, "u", "(-1, 1)"), expect_observed(r, "f#(u)", "2"),
                          expect_observed(r, "g#(u)", "1"), expect_verdict(r, "induced linear maps not ordered"),
                          expect_verdict(r, "induced linear maps positive on the pointwise free cone"),
                          expect_verdict(r, "f and g monotone into the rationals")});
       }},
      {"inserter-failure", "ordered vector spaces lose inserters", 1,
       [](const SuiteReport& r) {
         return first_of({expect_observed(r, "equalizer_dim", "0"), expect_observed(r, "preserves_inserters", "false"),
                          expect_observed(r, "order_faithful", "true"),
                          expect_verdict(r, "inserter of the underlying monotone maps is the whole half-line")});
       }},
      {"tensor-non-preservation", "semilattice and poset copowers differ", 1,
       [](const SuiteReport& r) {
         return first_of({expect_observed(r, "slat copower size", "4"), expect_observed(r, "pos copower size", "4"),
                          expect_verdict(r, "semilattice copower has a top"),
                          expect_verdict(r, "poset copower has no top"),
                          expect_verdict(r, "the two copowers are not isomorphic")});
       }},
      {"slat-solidity-witnesses", "semilattice forgetful functor witnesses", 300,
       [](const SuiteReport& r) {
         return first_of({expect_cap_at_least(r, "instance size", 3),
                          expect_cap_at_least(r, "verification universe", 4),
                          expect_verdict(r, "forgetful functor order-faithful"),
                          expect_verdict(r, "semilattice inserter universal"),
                          expect_verdict(r, "universal V-extension strongly order-universal")});
       }},
      {"frame-layer", "frame extensions, quotients and coproducts", 300,
       [](const SuiteReport& r) {
         return first_of({expect_cap_at_least(r, "test frames", 8), expect_observed(r, "U-extension vertex size", "3"),
                          expect_observed(r, "frame coproduct size", "6"),
                          expect_verdict(r, "frame quotient universal"),
                          expect_verdict(r, "coproduct certified against every test frame")});
       }},
      {"colimit-extension-round-trip", "colimits and universal extensions correspond", 300,
       [](const SuiteReport& r) {
         return first_of({expect_cap_at_least(r, "semilattice instances", 3),
                          expect_cap_at_least(r, "poset instances", 3),
                          expect_cap_at_least(r, "poset tensor weights", 3)});
       }},
      {"steps-cross-check", "steps construction matches direct colimits", 300,
       [](const SuiteReport& r) {
         return first_of({expect_cap_at_least(r, "instance size", 3),
                          expect_verdict(r, "co-inserter: steps output isomorphic to the direct colimit"),
                          expect_verdict(r, "cocomma: steps output isomorphic to the direct colimit")});
       }},
      {"cocomma-coinserter-interderivability", "cocommas and co-inserters derive each other", 120,
       [](const SuiteReport& r) {
         return first_of({expect_cap_at_least(r, "instance size", 3),
                          expect_verdict(r, "co-inserter from cocomma and coequalizer matches the direct one"),
                          expect_verdict(r, "cocomma from coproduct and co-inserter matches the direct one")});
       }},
      {"epi-class-conditions", "surjections satisfy the class conditions, isomorphisms do not", 120,
       [](const SuiteReport& r) {
         return first_of({expect_verdict(r, "surjections: (A) holds"), expect_verdict(r, "surjections: (P) holds"),
                          expect_verdict(r, "surjections: (W) holds"), expect_verdict(r, "isomorphisms: (A) fails"),
                          r.observations.contains("isomorphisms (A) witness") ? std::string{}
                                                                              : "missing (A) witness"});
       }},
      {"joint-order-epic-reduction", "joint surjectivity decides order-epic families", 120,
       [](const SuiteReport& r) {
         return first_of({expect_cap_at_least(r, "codomain size", 4), expect_cap_at_least(r, "pair domain size", 4),
                          expect_cap_at_least(r, "oracle test objects", 4),
                          expect_verdict(r, "joint surjectivity agrees with the quantifier oracle")});
       }},
  };
  return all;
}

}  // namespace

int main() {
  int failures = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const auto& c = criteria()[i];
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      const auto report = run_suite(c.suite);
      if (!report.passed()) {
        for (const auto& v : report.verdicts)
          if (!v.holds) {
            why = "verdict failed: " + v.check + " " + v.counterexample.dump();
            break;
          }
      }
      if (why.empty()) why = c.extra(report);
    } catch (const std::exception& e) {
      why = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && seconds >= c.limit_seconds)
      why = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    const bool ok = why.empty();
    failures += !ok;
    std::printf("%s criterion %zu: %s [%s] (%.2f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                c.description.c_str(), c.suite.c_str(), seconds, c.limit_seconds, ok ? "" : ": ", why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria().size()) - failures, criteria().size());
  return failures == 0 ? 0 : 1;
}

#pragma once

// Named invariant suites over enumerated instances. Each suite groups its
// instance checks into verdicts; a failing verdict carries the first
// counterexample as a re-runnable JSON fixture. Reports are deterministic
// for fixed caps (wall time is kept out of the emitted text).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordsolid/serialize.hpp"

namespace ordsolid {

struct SuiteOptions {
  /// Replaces the suite's primary size cap (for instance from ORDSOLID_CAP).
  std::optional<std::size_t> cap;
};

struct Verdict {
  std::string check;
  std::size_t instances = 0;
  bool holds = true;
  Json counterexample;  // null unless holds == false
};

struct SuiteReport {
  std::string name;
  std::map<std::string, std::size_t> caps;
  std::vector<Verdict> verdicts;
  /// Values the suite measured, e.g. the sizes of constructed vertices.
  std::map<std::string, std::string> observations;
  double wall_seconds = 0;

  std::size_t instances() const;
  bool passed() const;
  const Verdict* find(const std::string& check) const;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
};

const std::vector<SuiteInfo>& list_suites();
/// Throws SchemaError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Deterministic text rendering: one line per cap, verdict and observation.
std::string format_report(const SuiteReport& r);
Json report_json(const SuiteReport& r);

/// Order-isomorphism phi : a -> b with phi . from[k] = to[k] for every k,
/// if one exists. The legs fix phi on their images; the rest is searched.
std::optional<IndexMap> find_compatible_iso(const FinitePoset& a, const FinitePoset& b,
                                            const std::vector<IndexMap>& from, const std::vector<IndexMap>& to);

}  // namespace ordsolid

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lhv {

/// A marked site on the (phi_i, phi_j) sublattice. When the fast
/// coordinates of the pair hit it, primary states i and j swap.
/// The sign only matters for the effective generator, never for the
/// classical trajectory.
struct CrossingPoint {
  int i = 0;
  int j = 0;        // pair, i < j
  long long a = 0;  // site, 0 <= a < L_i
  long long b = 0;  // site, 0 <= b < L_j
  int sign = +1;    // +1 or -1

  friend bool operator==(const CrossingPoint&, const CrossingPoint&) = default;
};

/// Full automaton definition: N primary states, one fast phase per state
/// discretized into L_i lattice points, and a set of crossing points.
/// Indices are 0-based throughout the in-memory representation; the CLI
/// reports states 1-based.
struct ModelSpec {
  int n_primary = 0;
  std::vector<long long> periods;  // L_i >= 2, pairwise coprime
  double delta_t = 1.0;
  bool cbit_doubled = false;  // states paired (i, i + N/2)
  std::vector<CrossingPoint> crossings;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

enum class Severity { Warning, Error };

struct Issue {
  Severity severity;
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool ok = true;  // true iff no Error-severity issue
  std::vector<Issue> issues;

  bool has(const std::string& code) const;
};

/// Checks every structural invariant of a spec. Never throws; all
/// findings land in the report. Issue codes:
///   errors:   BAD_N, BAD_PERIOD, BAD_DELTA_T, NOT_COPRIME, BAD_PAIR,
///             SITE_OUT_OF_RANGE, BAD_SIGN, DUPLICATE_SITE,
///             TOO_MANY_CROSSINGS, BAD_CBIT
///   warnings: PERTURBATIVITY (some n_ij/(L_i L_j) > 0.1),
///             SIMULTANEOUS_OVERLAP (crossings of overlapping pairs can
///             fire on the same step)
ValidationReport validate_spec(const ModelSpec& spec);

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the JSON spec document. Unknown fields are rejected. Schema
/// violations throw SpecError naming the offending field; semantic
/// problems (coprimality, ranges, duplicates) are left to validate_spec.
ModelSpec parse_spec(const std::string& text);

std::string serialize_spec(const ModelSpec& spec);

ModelSpec load_spec_file(const std::string& path);
void save_spec_file(const ModelSpec& spec, const std::string& path);

}  // namespace lhv

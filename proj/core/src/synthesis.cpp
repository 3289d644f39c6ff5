#include "lhv/synthesis.hpp"

#include <cmath>
#include <numbers>

namespace lhv {

using std::numbers::pi;

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<long long> choose_periods(int n, long long lambda) {
  if (n < 1) throw std::invalid_argument("need at least one period");
  if (lambda < 2) throw std::invalid_argument("lambda must be >= 2");
  std::vector<long long> periods;
  long long p = lambda;
  while (static_cast<int>(periods.size()) < n) {
    if (is_prime(p)) periods.push_back(p);
    ++p;
  }
  return periods;
}

std::vector<std::pair<long long, long long>> place_crossings(long long count,
                                                             long long L_i,
                                                             long long L_j) {
  const long long sub = L_i * L_j;
  if (count < 0 || count > sub) {
    throw std::invalid_argument("crossing count out of range");
  }
  std::vector<std::pair<long long, long long>> sites;
  sites.reserve(static_cast<size_t>(count));
  for (long long s = 0; s < count; ++s) {
    // trigger times evenly spread over the joint orbit; distinct since
    // count <= L_i L_j
    const long long t = s * sub / count;
    sites.emplace_back(t % L_i, t % L_j);
  }
  return sites;
}

SynthesisReport synthesize(const Generator& target, long long lambda) {
  if (lambda < 2) throw SynthesisError("lambda must be >= 2");
  const int n = target.dim();

  SynthesisReport report;
  report.target = target;
  report.spec.n_primary = n;
  report.spec.periods = choose_periods(n, lambda);
  report.achieved = Generator(n);

  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const long long L_i = report.spec.periods[i];
      const long long L_j = report.spec.periods[j];
      const long long sub = L_i * L_j;
      const double g = target(j, i);
      const long long count =
          std::llround(2.0 * static_cast<double>(sub) * std::abs(g) / pi);
      if (count > sub) {
        throw SynthesisError(
            "target entry (" + std::to_string(j) + "," + std::to_string(i) +
            ") = " + std::to_string(g) + " needs " + std::to_string(count) +
            " crossings on a sublattice of " + std::to_string(sub) +
            "; increase lambda or rescale delta_t");
      }
      const int sign = g < 0 ? -1 : +1;
      PairSynthesis ps;
      ps.i = i;
      ps.j = j;
      ps.target = g;
      ps.achieved = 0.0;  // filled from build_generator below
      ps.error = 0.0;
      ps.bound = pi / (4.0 * static_cast<double>(sub));
      ps.count = count;
      ps.sign = sign;
      ps.L_i = L_i;
      ps.L_j = L_j;
      ps.dropped = (count == 0 && g != 0.0);
      report.pairs.push_back(ps);

      report.perturbativity =
          std::max(report.perturbativity,
                   static_cast<double>(count) / static_cast<double>(sub));

      for (auto [a, b] : place_crossings(count, L_i, L_j)) {
        report.spec.crossings.push_back({i, j, a, b, sign});
      }

      if (ps.dropped) {
        report.warnings.push_back(
            "coupling (" + std::to_string(j) + "," + std::to_string(i) +
            ") = " + std::to_string(g) +
            " rounded to zero crossings and was dropped");
      }
    }
  }

  // The achieved matrix is defined as whatever build_generator yields for
  // the synthesized spec; this keeps the round-trip exact.
  report.achieved = build_generator(report.spec);
  for (PairSynthesis& ps : report.pairs) {
    ps.achieved = report.achieved(ps.j, ps.i);
    ps.error = std::abs(ps.achieved - ps.target);
    report.max_error = std::max(report.max_error, ps.error);
  }
  if (report.perturbativity > 0.1) {
    report.warnings.push_back(
        "perturbativity ratio " + std::to_string(report.perturbativity) +
        " exceeds 0.1; the first-order generator may be a poor description");
  }
  return report;
}

}  // namespace lhv

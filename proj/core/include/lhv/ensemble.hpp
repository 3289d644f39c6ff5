#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lhv/model.hpp"

namespace lhv {

enum class MarginalMethod { Exact, MonteCarlo, Analytic };

/// Time-indexed probability distributions over primary states.
struct MarginalSeries {
  std::vector<long long> times;
  std::vector<std::vector<double>> probs;    // probs[t][i]
  std::vector<std::vector<double>> stderrs;  // empty unless Monte Carlo
  MarginalMethod method = MarginalMethod::Exact;
  long long sample_count = 0;
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(long long required, long long allowed);
  long long required;
  long long allowed;
};

inline constexpr long long kDefaultBudget = 1'000'000'000;  // trajectory-steps

/// Exact primary-state marginals for the ensemble that is uniform over
/// all prod(L_i) fast initial conditions, with the initial primary drawn
/// independently from p0. Counts are accumulated in integers and divided
/// once at output, so results are bit-for-bit reproducible.
/// Throws BudgetExceeded when prod(L_i) * t_max exceeds the budget.
MarginalSeries exact_marginals(const ModelSpec& spec,
                               const std::vector<double>& p0, long long t_max,
                               long long budget = kDefaultBudget,
                               int threads = 1);

/// Seeded Monte Carlo estimator of the same marginals. Per-sample RNG
/// streams are derived from (seed, sample index), so serial and parallel
/// runs agree exactly. stderrs[t][i] = sqrt(p (1-p) / n).
MarginalSeries sample_marginals(const ModelSpec& spec,
                                const std::vector<double>& p0, long long t_max,
                                long long n_samples, uint64_t seed,
                                int threads = 1);

}  // namespace lhv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lhv/ensemble.hpp"
#include "lhv/quantum.hpp"

namespace lhv {

struct Checkpoint {
  long long time;
  double tv;  // total-variation distance at this time
};

/// Pointwise total-variation comparison of two marginal series on the
/// same time grid.
struct ComparisonReport {
  std::vector<long long> times;
  std::vector<double> tv;  // 0.5 * sum_i |p_i - q_i| per time
  double max_tv = 0.0;
  long long argmax_time = 0;
  std::vector<Checkpoint> checkpoints;  // t = 0 and multiples of the period
};

struct GridMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// checkpoint_period 0 means "t = 0 only"; otherwise every multiple of the
/// period inside the grid is a checkpoint.
ComparisonReport compare(const MarginalSeries& classical,
                         const MarginalSeries& quantum,
                         long long checkpoint_period = 0);

struct SweepRow {
  long long lambda;
  std::vector<long long> periods;
  double max_entry_error;  // achieved vs target generator
  double max_tv;           // over one quantum period of the slowest coupling
  MarginalMethod method;   // exact, or Monte Carlo fallback
  double runtime_seconds;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // lambda strictly increasing
};

struct SweepOptions {
  long long budget = kDefaultBudget;
  long long mc_samples = 100000;  // fallback when exact exceeds the budget
  uint64_t seed = 12345;
  int threads = 1;
  long long max_horizon = 100000;  // cap on steps per row
};

/// For each lambda: synthesize the target, run the classical ensemble and
/// the quantum reference over one quantum period of the smallest nonzero
/// coupling, and record the generator error and the worst TV distance.
SweepTable convergence_sweep(const Generator& target,
                             const std::vector<long long>& lambdas,
                             const std::vector<double>& p0,
                             const SweepOptions& options = {});

/// Quantum marginal series for a spec: evolve psi0 = componentwise sqrt of
/// p0 under the effective generator and apply the Born rule per step.
MarginalSeries quantum_marginals(const ModelSpec& spec,
                                 const std::vector<double>& p0,
                                 long long t_max);

}  // namespace lhv

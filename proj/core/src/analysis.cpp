#include "lhv/analysis.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "lhv/automaton.hpp"
#include "lhv/synthesis.hpp"

namespace lhv {

using std::numbers::pi;

ComparisonReport compare(const MarginalSeries& classical,
                         const MarginalSeries& quantum,
                         long long checkpoint_period) {
  if (classical.times != quantum.times) {
    throw GridMismatch("marginal series are on different time grids");
  }
  if (!classical.probs.empty() && !quantum.probs.empty() &&
      classical.probs[0].size() != quantum.probs[0].size()) {
    throw GridMismatch("marginal series have different state counts");
  }

  ComparisonReport report;
  report.times = classical.times;
  for (size_t t = 0; t < classical.times.size(); ++t) {
    double tv = 0.0;
    for (size_t i = 0; i < classical.probs[t].size(); ++i) {
      tv += std::abs(classical.probs[t][i] - quantum.probs[t][i]);
    }
    tv *= 0.5;
    report.tv.push_back(tv);
    if (tv > report.max_tv) {
      report.max_tv = tv;
      report.argmax_time = classical.times[t];
    }
    const long long time = classical.times[t];
    const bool is_checkpoint =
        time == 0 ||
        (checkpoint_period > 0 && time % checkpoint_period == 0);
    if (is_checkpoint) report.checkpoints.push_back({time, tv});
  }
  return report;
}

MarginalSeries quantum_marginals(const ModelSpec& spec,
                                 const std::vector<double>& p0,
                                 long long t_max) {
  const int n = spec.n_primary;
  const int wave_dim = n;
  const int out_dim = spec.cbit_doubled ? n / 2 : n;
  if (static_cast<int>(p0.size()) != out_dim) {
    throw std::invalid_argument("p0 size does not match the observable states");
  }

  // Real amplitudes: sqrt of the initial probabilities, imaginary parts 0.
  Eigen::VectorXd psi0 = Eigen::VectorXd::Zero(wave_dim);
  for (int i = 0; i < out_dim; ++i) psi0(i) = std::sqrt(p0[i]);

  std::vector<long long> times;
  for (long long t = 0; t <= t_max; ++t) times.push_back(t);

  const Generator g = build_generator(spec);
  const auto waves = evolve(g, psi0, times, spec.delta_t);

  MarginalSeries series;
  series.method = MarginalMethod::Analytic;
  series.times = times;
  for (const Eigen::VectorXd& psi : waves) {
    const Eigen::VectorXd p = born(psi, spec.cbit_doubled);
    series.probs.emplace_back(p.data(), p.data() + p.size());
  }
  return series;
}

SweepTable convergence_sweep(const Generator& target,
                             const std::vector<long long>& lambdas,
                             const std::vector<double>& p0,
                             const SweepOptions& options) {
  if (lambdas.size() < 2) {
    throw std::invalid_argument("sweep needs at least two lambda values");
  }
  for (size_t k = 1; k < lambdas.size(); ++k) {
    if (lambdas[k] <= lambdas[k - 1]) {
      throw std::invalid_argument("lambdas must be strictly increasing");
    }
  }

  SweepTable table;
  for (long long lambda : lambdas) {
    const auto start = std::chrono::steady_clock::now();
    SynthesisReport synth = synthesize(target, lambda);

    // Horizon: one quantum period of the smallest nonzero coupling.
    double omega_min = 0.0;
    for (const PairSynthesis& ps : synth.pairs) {
      const double w = std::abs(ps.achieved);
      if (w > 0.0 && (omega_min == 0.0 || w < omega_min)) omega_min = w;
    }
    long long horizon = 16;
    if (omega_min > 0.0) {
      horizon = static_cast<long long>(
          std::ceil(2.0 * pi / (omega_min * synth.spec.delta_t)));
      horizon = std::min(horizon, options.max_horizon);
    }

    MarginalSeries classical;
    MarginalMethod method = MarginalMethod::Exact;
    try {
      classical = exact_marginals(synth.spec, p0, horizon, options.budget,
                                  options.threads);
    } catch (const BudgetExceeded&) {
      method = MarginalMethod::MonteCarlo;
      classical = sample_marginals(synth.spec, p0, horizon, options.mc_samples,
                                   options.seed, options.threads);
    }
    const MarginalSeries quantum = quantum_marginals(synth.spec, p0, horizon);
    const ComparisonReport cmp = compare(classical, quantum);

    const auto end = std::chrono::steady_clock::now();
    SweepRow row;
    row.lambda = lambda;
    row.periods = synth.spec.periods;
    row.max_entry_error = synth.max_error;
    row.max_tv = cmp.max_tv;
    row.method = method;
    row.runtime_seconds = std::chrono::duration<double>(end - start).count();
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace lhv

#include "lhv/ensemble.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <thread>

#include "lhv/automaton.hpp"

namespace lhv {

BudgetExceeded::BudgetExceeded(long long required_, long long allowed_)
    : std::runtime_error("compute budget exceeded: required " +
                         std::to_string(required_) + " trajectory-steps, allowed " +
                         std::to_string(allowed_)),
      required(required_),
      allowed(allowed_) {}

namespace {

void check_inputs(const ModelSpec& spec, const std::vector<double>& p0,
                  long long t_max) {
  if (static_cast<int>(p0.size()) != spec.n_primary) {
    throw std::invalid_argument("p0 size does not match n_primary");
  }
  double sum = std::accumulate(p0.begin(), p0.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("p0 must sum to 1");
  }
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
}

std::vector<long long> fast_from_index(const ModelSpec& spec, long long index) {
  std::vector<long long> fast(spec.periods.size());
  for (size_t i = 0; i < spec.periods.size(); ++i) {
    fast[i] = index % spec.periods[i];
    index /= spec.periods[i];
  }
  return fast;
}

// splitmix64; decorrelates per-sample streams derived from (seed, index).
uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct SampleRng {
  uint64_t state;
  explicit SampleRng(uint64_t seed) : state(seed) {}
  uint64_t next() { return state = mix64(state); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  long long below(long long n) {
    return static_cast<long long>(next() % static_cast<uint64_t>(n));
  }
};

}  // namespace

MarginalSeries exact_marginals(const ModelSpec& spec,
                               const std::vector<double>& p0, long long t_max,
                               long long budget, int threads) {
  check_inputs(spec, p0, t_max);
  const int n = spec.n_primary;
  const long long total = joint_period(spec);  // product of coprime periods
  if (t_max > 0 && total > budget / t_max) {
    throw BudgetExceeded(total * t_max, budget);
  }

  const Automaton automaton(spec);
  const size_t n_times = static_cast<size_t>(t_max) + 1;

  // counts[t][from][to]: fast initial conditions whose trajectory maps
  // primary `from` at t=0 onto `to` at step t. Integer accumulation;
  // the single division at the end keeps results bit-exact.
  auto run_range = [&](long long begin, long long end,
                       std::vector<long long>* counts) {
    std::vector<long long> fast;
    std::vector<int> perm(n);
    std::vector<std::pair<int, int>> swaps;
    for (long long index = begin; index < end; ++index) {
      fast = fast_from_index(spec, index);
      std::iota(perm.begin(), perm.end(), 0);
      for (size_t t = 0; t < n_times; ++t) {
        for (int from = 0; from < n; ++from) {
          (*counts)[(t * n + from) * n + perm[from]]++;
        }
        if (t + 1 == n_times) break;
        automaton.firing_swaps(fast, &swaps);
        for (auto [i, j] : swaps) {
          for (int& v : perm) {
            if (v == i) v = j;
            else if (v == j) v = i;
          }
        }
        automaton.advance(&fast);
      }
    }
  };

  const int workers = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, total)));
  std::vector<std::vector<long long>> partial(
      workers, std::vector<long long>(n_times * n * n, 0));
  if (workers == 1) {
    run_range(0, total, &partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      long long begin = total * w / workers;
      long long end = total * (w + 1) / workers;
      pool.emplace_back(run_range, begin, end, &partial[w]);
    }
    for (auto& th : pool) th.join();
    for (int w = 1; w < workers; ++w) {
      for (size_t k = 0; k < partial[0].size(); ++k) partial[0][k] += partial[w][k];
    }
  }
  const std::vector<long long>& counts = partial[0];

  MarginalSeries series;
  series.method = MarginalMethod::Exact;
  series.sample_count = total;
  const double norm = 1.0 / static_cast<double>(total);
  for (size_t t = 0; t < n_times; ++t) {
    series.times.push_back(static_cast<long long>(t));
    std::vector<double> row(n, 0.0);
    for (int to = 0; to < n; ++to) {
      double acc = 0.0;
      for (int from = 0; from < n; ++from) {
        acc += p0[from] * static_cast<double>(counts[(t * n + from) * n + to]);
      }
      row[to] = acc * norm;
    }
    series.probs.push_back(std::move(row));
  }
  return series;
}

MarginalSeries sample_marginals(const ModelSpec& spec,
                                const std::vector<double>& p0, long long t_max,
                                long long n_samples, uint64_t seed,
                                int threads) {
  check_inputs(spec, p0, t_max);
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  const int n = spec.n_primary;
  const Automaton automaton(spec);
  const size_t n_times = static_cast<size_t>(t_max) + 1;

  auto run_range = [&](long long begin, long long end,
                       std::vector<long long>* counts) {
    std::vector<long long> fast(spec.periods.size());
    for (long long s = begin; s < end; ++s) {
      SampleRng rng(mix64(seed ^ mix64(static_cast<uint64_t>(s))));
      for (size_t i = 0; i < spec.periods.size(); ++i) {
        fast[i] = rng.below(spec.periods[i]);
      }
      double u = rng.uniform();
      int primary = n - 1;
      double cdf = 0.0;
      for (int i = 0; i < n; ++i) {
        cdf += p0[i];
        if (u < cdf) {
          primary = i;
          break;
        }
      }
      for (size_t t = 0; t < n_times; ++t) {
        (*counts)[t * n + primary]++;
        if (t + 1 == n_times) break;
        primary = automaton.transition(primary, fast);
        automaton.advance(&fast);
      }
    }
  };

  const int workers = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, n_samples)));
  std::vector<std::vector<long long>> partial(
      workers, std::vector<long long>(n_times * n, 0));
  if (workers == 1) {
    run_range(0, n_samples, &partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      long long begin = n_samples * w / workers;
      long long end = n_samples * (w + 1) / workers;
      pool.emplace_back(run_range, begin, end, &partial[w]);
    }
    for (auto& th : pool) th.join();
    for (int w = 1; w < workers; ++w) {
      for (size_t k = 0; k < partial[0].size(); ++k) partial[0][k] += partial[w][k];
    }
  }
  const std::vector<long long>& counts = partial[0];

  MarginalSeries series;
  series.method = MarginalMethod::MonteCarlo;
  series.sample_count = n_samples;
  const double norm = 1.0 / static_cast<double>(n_samples);
  for (size_t t = 0; t < n_times; ++t) {
    series.times.push_back(static_cast<long long>(t));
    std::vector<double> row(n), err(n);
    for (int i = 0; i < n; ++i) {
      double p = static_cast<double>(counts[t * n + i]) * norm;
      row[i] = p;
      err[i] = std::sqrt(p * (1.0 - p) * norm);
    }
    series.probs.push_back(std::move(row));
    series.stderrs.push_back(std::move(err));
  }
  return series;
}

}  // namespace lhv

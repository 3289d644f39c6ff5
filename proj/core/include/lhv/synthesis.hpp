#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lhv/model.hpp"
#include "lhv/quantum.hpp"

namespace lhv {

/// n consecutive primes starting at the smallest prime >= lambda.
/// Distinct primes, so the periods are pairwise coprime by construction.
std::vector<long long> choose_periods(int n, long long lambda);

/// Evenly spaced crossing sites for one pair: trigger times
/// t_s = floor(s L_i L_j / n), mapped through the CRT to sites
/// (t_s mod L_i, t_s mod L_j). Distinct by construction.
std::vector<std::pair<long long, long long>> place_crossings(long long count,
                                                             long long L_i,
                                                             long long L_j);

struct PairSynthesis {
  int i, j;
  double target;    // target generator entry (j, i)
  double achieved;  // sign * pi n / (2 L_i L_j)
  double error;     // |achieved - target|
  double bound;     // pi / (4 L_i L_j)
  long long count;  // n_ij
  int sign;
  long long L_i, L_j;
  bool dropped;  // count rounded to 0 while target nonzero
};

struct SynthesisReport {
  ModelSpec spec;
  Generator achieved;
  Generator target;
  std::vector<PairSynthesis> pairs;
  double max_error = 0.0;
  double perturbativity = 0.0;  // max n_ij / (L_i L_j)
  std::vector<std::string> warnings;
};

struct SynthesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inverse of build_generator up to rounding: picks prime periods at scale
/// lambda, rounds each coupling to the nearest realizable multiple of
/// pi / (2 L_i L_j), and places the crossings. Per-entry error is at most
/// pi / (4 L_i L_j). Throws SynthesisError when a target entry needs
/// n_ij > L_i L_j (pick a larger lambda or rescale delta_t).
SynthesisReport synthesize(const Generator& target, long long lambda);

}  // namespace lhv

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lhv/model.hpp"

namespace lhv {

/// One ontological configuration: the occupied primary state plus the
/// lattice coordinate k_i of every fast phase (phi_i = 2 pi k_i / L_i).
struct ClassicalState {
  int primary = 0;
  std::vector<long long> fast;

  friend bool operator==(const ClassicalState&, const ClassicalState&) = default;
};

struct PrimaryTimeSeries {
  long long t0 = 0;
  std::vector<int> values;  // one primary index per step, values[0] at t0
};

/// lcm of all periods; equals their product under pairwise coprimality.
/// Throws std::overflow_error if the product does not fit in 64 bits.
long long joint_period(const ModelSpec& spec);

/// Unique t in [0, L_i*L_j) at which a pair trajectory started at
/// (k_i, k_j) reaches site (a, b): the Chinese-remainder solution of
/// t = a - k_i (mod L_i), t = b - k_j (mod L_j). Requires coprime periods.
long long crossing_time(long long L_i, long long L_j, long long a, long long b,
                        long long k_i, long long k_j);

/// Precompiled stepper for one spec. A step first applies every firing
/// crossing (site match on the pair's current coordinates, occupant in
/// the pair), in canonical (i, j) order, then advances every fast
/// coordinate by one.
class Automaton {
 public:
  explicit Automaton(const ModelSpec& spec);

  const ModelSpec& spec() const { return spec_; }

  ClassicalState step(const ClassicalState& state) const;

  PrimaryTimeSeries run_trajectory(const ClassicalState& initial,
                                   long long steps) const;

  /// Transpositions firing at the given fast coordinates, sorted by (i, j).
  /// Fills `out`; the fast coordinates themselves are untouched.
  void firing_swaps(const std::vector<long long>& fast,
                    std::vector<std::pair<int, int>>* out) const;

  /// Applies firing swaps to a single occupant index.
  int transition(int primary, const std::vector<long long>& fast) const;

  void advance(std::vector<long long>* fast) const;

 private:
  struct PairTable {
    int i, j;
    long long L_i, L_j;
    std::vector<uint8_t> hit;  // flat [a * L_j + b] occupancy
  };

  ModelSpec spec_;
  std::vector<PairTable> pairs_;  // sorted by (i, j)
};

}  // namespace lhv

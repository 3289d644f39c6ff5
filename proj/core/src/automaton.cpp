#include "lhv/automaton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace lhv {

long long joint_period(const ModelSpec& spec) {
  long long acc = 1;
  for (long long L : spec.periods) {
    long long g = std::gcd(acc, L);
    long long factor = L / g;
    if (acc > std::numeric_limits<long long>::max() / factor) {
      throw std::overflow_error("joint period exceeds 64-bit range");
    }
    acc *= factor;
  }
  return acc;
}

namespace {

// x with a x = 1 (mod m), for gcd(a, m) = 1.
long long mod_inverse(long long a, long long m) {
  long long t = 0, new_t = 1;
  long long r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    long long q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("moduli not coprime");
  return ((t % m) + m) % m;
}

}  // namespace

long long crossing_time(long long L_i, long long L_j, long long a, long long b,
                        long long k_i, long long k_j) {
  const long long r_i = (((a - k_i) % L_i) + L_i) % L_i;
  const long long r_j = (((b - k_j) % L_j) + L_j) % L_j;
  // t = r_i + L_i * s with s solving L_i s = r_j - r_i (mod L_j)
  const long long s =
      (mod_inverse(L_i % L_j, L_j) * ((((r_j - r_i) % L_j) + L_j) % L_j)) % L_j;
  return r_i + L_i * s;
}

Automaton::Automaton(const ModelSpec& spec) : spec_(spec) {
  std::map<std::pair<int, int>, std::vector<const CrossingPoint*>> by_pair;
  for (const CrossingPoint& c : spec_.crossings) by_pair[{c.i, c.j}].push_back(&c);
  for (const auto& [pair, list] : by_pair) {
    PairTable table;
    table.i = pair.first;
    table.j = pair.second;
    table.L_i = spec_.periods.at(table.i);
    table.L_j = spec_.periods.at(table.j);
    table.hit.assign(static_cast<size_t>(table.L_i * table.L_j), 0);
    for (const CrossingPoint* c : list) {
      table.hit.at(static_cast<size_t>(c->a * table.L_j + c->b)) = 1;
    }
    pairs_.push_back(std::move(table));
  }
  // std::map already yields canonical (i, j) order.
}

void Automaton::firing_swaps(const std::vector<long long>& fast,
                             std::vector<std::pair<int, int>>* out) const {
  out->clear();
  for (const PairTable& p : pairs_) {
    const long long a = fast[p.i];
    const long long b = fast[p.j];
    if (p.hit[static_cast<size_t>(a * p.L_j + b)]) out->emplace_back(p.i, p.j);
  }
}

int Automaton::transition(int primary, const std::vector<long long>& fast) const {
  for (const PairTable& p : pairs_) {
    if (primary != p.i && primary != p.j) continue;
    const long long a = fast[p.i];
    const long long b = fast[p.j];
    if (p.hit[static_cast<size_t>(a * p.L_j + b)]) {
      primary = (primary == p.i) ? p.j : p.i;
    }
  }
  return primary;
}

void Automaton::advance(std::vector<long long>* fast) const {
  for (size_t i = 0; i < fast->size(); ++i) {
    if (++(*fast)[i] == spec_.periods[i]) (*fast)[i] = 0;
  }
}

ClassicalState Automaton::step(const ClassicalState& state) const {
  ClassicalState next = state;
  next.primary = transition(state.primary, state.fast);
  advance(&next.fast);
  return next;
}

PrimaryTimeSeries Automaton::run_trajectory(const ClassicalState& initial,
                                            long long steps) const {
  PrimaryTimeSeries series;
  series.values.reserve(static_cast<size_t>(steps) + 1);
  series.values.push_back(initial.primary);
  int primary = initial.primary;
  std::vector<long long> fast = initial.fast;
  for (long long t = 0; t < steps; ++t) {
    primary = transition(primary, fast);
    advance(&fast);
    series.values.push_back(primary);
  }
  return series;
}

}  // namespace lhv

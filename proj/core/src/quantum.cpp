#include "lhv/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace lhv {

using std::numbers::pi;

double PiRational::value() const {
  return pi * static_cast<double>(num) / static_cast<double>(den);
}

PiRational reduce(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

Generator::Generator(int dim)
    : dim_(dim), lower_(static_cast<size_t>(dim) * (dim - 1) / 2, 0.0) {}

namespace {
size_t lower_index(int r, int c) {
  // strictly lower triangle, row-major: rows r = 1.., entries c = 0..r-1
  return static_cast<size_t>(r) * (r - 1) / 2 + c;
}
}  // namespace

double Generator::operator()(int r, int c) const {
  if (r == c) return 0.0;
  if (r > c) return lower_[lower_index(r, c)];
  return -lower_[lower_index(c, r)];
}

void Generator::set(int r, int c, double v) {
  if (r == c) throw std::invalid_argument("diagonal of a generator is zero");
  if (r > c) {
    lower_[lower_index(r, c)] = v;
  } else {
    lower_[lower_index(c, r)] = -v;
  }
}

Eigen::MatrixXd Generator::matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int r = 1; r < dim_; ++r) {
    for (int c = 0; c < r; ++c) {
      m(r, c) = lower_[lower_index(r, c)];
      m(c, r) = -m(r, c);
    }
  }
  return m;
}

Generator Generator::from_matrix(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("matrix is not antisymmetric");
  }
  Generator g(static_cast<int>(m.rows()));
  for (int r = 1; r < g.dim_; ++r) {
    for (int c = 0; c < r; ++c) g.lower_[lower_index(r, c)] = m(r, c);
  }
  return g;
}

std::vector<PiRational> build_generator_exact(const ModelSpec& spec) {
  const int n = spec.n_primary;
  std::map<std::pair<int, int>, long long> net;  // signed crossing count
  for (const CrossingPoint& c : spec.crossings) net[{c.i, c.j}] += c.sign;

  std::vector<PiRational> lower(static_cast<size_t>(n) * (n - 1) / 2, {0, 1});
  for (const auto& [pair, count] : net) {
    auto [i, j] = pair;
    // G[j][i] = pi * count / (2 L_i L_j)
    lower[lower_index(j, i)] =
        reduce(count, 2 * spec.periods.at(i) * spec.periods.at(j));
  }
  return lower;
}

Generator build_generator(const ModelSpec& spec) {
  const auto exact = build_generator_exact(spec);
  Generator g(spec.n_primary);
  for (int r = 1; r < spec.n_primary; ++r) {
    for (int c = 0; c < r; ++c) {
      g.set(r, c, exact[lower_index(r, c)].value());
    }
  }
  return g;
}

std::vector<Eigen::VectorXd> evolve(const Generator& g,
                                    const Eigen::VectorXd& psi0,
                                    const std::vector<long long>& times,
                                    double delta_t) {
  if (psi0.size() != g.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Eigen::VectorXd> out;
  out.reserve(times.size());
  if (g.dim() == 2) {
    // planar rotation, closed form
    const double omega = g(1, 0);
    for (long long t : times) {
      const double angle = omega * static_cast<double>(t) * delta_t;
      Eigen::VectorXd psi(2);
      psi << std::cos(angle) * psi0(0) - std::sin(angle) * psi0(1),
          std::sin(angle) * psi0(0) + std::cos(angle) * psi0(1);
      out.push_back(std::move(psi));
    }
    return out;
  }
  const Eigen::MatrixXd m = g.matrix();
  for (long long t : times) {
    Eigen::MatrixXd u = (m * (static_cast<double>(t) * delta_t)).exp();
    out.push_back(u * psi0);
  }
  return out;
}

Eigen::VectorXd born(const Eigen::VectorXd& psi, bool cbit_doubled) {
  if (!cbit_doubled) return psi.cwiseAbs2();
  if (psi.size() % 2 != 0) {
    throw std::invalid_argument("cbit_doubled needs even dimension");
  }
  const int m = static_cast<int>(psi.size()) / 2;
  Eigen::VectorXd p(m);
  for (int i = 0; i < m; ++i) p(i) = psi(i) * psi(i) + psi(i + m) * psi(i + m);
  return p;
}

Eigen::MatrixXcd HermitianMatrix::complex() const {
  return sym.cast<std::complex<double>>() +
         std::complex<double>(0, 1) * antisym.cast<std::complex<double>>();
}

HermitianMatrix HermitianMatrix::from_complex(const Eigen::MatrixXcd& h,
                                              double tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix not square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
  HermitianMatrix out;
  out.sym = h.real();
  out.antisym = h.imag();
  // enforce the split exactly
  out.sym = 0.5 * (out.sym + out.sym.transpose()).eval();
  out.antisym = 0.5 * (out.antisym - out.antisym.transpose()).eval();
  return out;
}

Generator complexify(const HermitianMatrix& h) {
  const int m = h.dim();
  if ((h.sym - h.sym.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
      (h.antisym + h.antisym.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("input is not Hermitian");
  }
  Eigen::MatrixXd block(2 * m, 2 * m);
  block.topLeftCorner(m, m) = h.antisym;
  block.topRightCorner(m, m) = h.sym;
  block.bottomLeftCorner(m, m) = -h.sym;
  block.bottomRightCorner(m, m) = h.antisym;
  return Generator::from_matrix(block);
}

CycleSpectrum cycle_spectrum(const std::vector<int>& perm, double delta_t,
                             const std::vector<double>& offsets) {
  const int m = static_cast<int>(perm.size());
  std::vector<bool> seen(m, false);
  for (int v : perm) {
    if (v < 0 || v >= m || seen[v]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v] = true;
  }

  CycleSpectrum spectrum;
  spectrum.delta_t = delta_t;
  std::vector<bool> visited(m, false);
  for (int start = 0; start < m; ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    int k = start;
    do {
      visited[k] = true;
      cycle.members.push_back(k);
      k = perm[k];
    } while (k != start);
    cycle.period = static_cast<long long>(cycle.members.size());
    cycle.offset = offsets.empty() ? 0.0 : offsets.at(spectrum.cycles.size());
    for (long long n = 0; n < cycle.period; ++n) {
      cycle.energies.push_back(
          2.0 * pi * static_cast<double>(n) /
              (static_cast<double>(cycle.period) * delta_t) +
          cycle.offset);
    }
    spectrum.cycles.push_back(std::move(cycle));
  }

  // Spectral cross-check: eigenphases of the permutation matrix must match
  // the ladder (offsets excluded, they are pure bookkeeping).
  if (m > 0 && m <= 64) {
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(m, m);
    for (int k2 = 0; k2 < m; ++k2) u(perm[k2], k2) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXd> solver(u);
    std::vector<double> phases;
    for (int k2 = 0; k2 < m; ++k2) {
      double phase = -std::arg(solver.eigenvalues()(k2)) / delta_t;
      if (phase < -1e-12) phase += 2.0 * pi / delta_t;
      phases.push_back(phase);
    }
    std::vector<double> ladder;
    for (const Cycle& c : spectrum.cycles) {
      for (double e : c.energies) ladder.push_back(e - c.offset);
    }
    std::sort(phases.begin(), phases.end());
    std::sort(ladder.begin(), ladder.end());
    for (int k2 = 0; k2 < m; ++k2) {
      double diff = std::abs(phases[k2] - ladder[k2]);
      diff = std::min(diff, std::abs(diff - 2.0 * pi / delta_t));
      if (diff > 1e-9) {
        throw std::logic_error("cycle spectrum disagrees with eigenphases");
      }
    }
  }
  return spectrum;
}

}  // namespace lhv

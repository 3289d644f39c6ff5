#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "lhv/model.hpp"

namespace lhv {

/// Exact value pi * num / den, reduced, den > 0.
struct PiRational {
  long long num = 0;
  long long den = 1;

  double value() const;
  friend bool operator==(const PiRational&, const PiRational&) = default;
};

PiRational reduce(long long num, long long den);

/// Real antisymmetric N x N generator, dpsi/dt = G psi with t in units of
/// delta_t. Only the strictly lower triangle is stored; the upper half is
/// derived, so antisymmetry is exact at the representation level.
class Generator {
 public:
  Generator() = default;
  explicit Generator(int dim);

  int dim() const { return dim_; }

  double operator()(int r, int c) const;
  void set(int r, int c, double v);  // r != c; writes the (r,c) entry

  Eigen::MatrixXd matrix() const;
  static Generator from_matrix(const Eigen::MatrixXd& m, double tol = 1e-12);

  /// Strictly-lower-triangle storage, rows r = 1..N-1, entries (r, c), c < r.
  const std::vector<double>& lower() const { return lower_; }

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  int dim_ = 0;
  std::vector<double> lower_;
};

/// Effective slow-sector generator of a spec: for each pair (i, j), i < j,
/// G[j][i] = (pi/2) * (sum of crossing signs) / (L_i L_j).
Generator build_generator(const ModelSpec& spec);

/// Same entries as exact rationals of pi (lower-triangle order as
/// Generator::lower).
std::vector<PiRational> build_generator_exact(const ModelSpec& spec);

/// psi(t) = exp(G t delta_t) psi0 for each requested step count t.
/// The flow is orthogonal, so norms are preserved.
std::vector<Eigen::VectorXd> evolve(const Generator& g,
                                    const Eigen::VectorXd& psi0,
                                    const std::vector<long long>& times,
                                    double delta_t = 1.0);

/// Real-form Born rule. Plain: P_i = psi_i^2. With cbit_doubled (dim 2M):
/// P_i = psi_i^2 + psi_{i+M}^2, the partner carrying the imaginary part.
Eigen::VectorXd born(const Eigen::VectorXd& psi, bool cbit_doubled);

/// Hermitian H = A + iB with A real symmetric and B real antisymmetric.
struct HermitianMatrix {
  Eigen::MatrixXd sym;       // A
  Eigen::MatrixXd antisym;   // B

  int dim() const { return static_cast<int>(sym.rows()); }
  Eigen::MatrixXcd complex() const;
  static HermitianMatrix from_complex(const Eigen::MatrixXcd& h,
                                      double tol = 1e-12);
};

/// Doubles the state space so the complex flow dpsi/dt = -iH psi becomes a
/// real antisymmetric flow on (psi_R, psi_I): returns [[B, A], [-A, B]].
Generator complexify(const HermitianMatrix& h);

struct Cycle {
  std::vector<int> members;      // in orbit order
  long long period = 0;          // T_r
  double offset = 0.0;           // delta-E_r
  std::vector<double> energies;  // E_{n,r} = 2 pi n / (T_r delta_t) + offset
};

struct CycleSpectrum {
  std::vector<Cycle> cycles;
  double delta_t = 1.0;
};

/// Cycle decomposition of a permutation with the equidistant energy ladder
/// per cycle. Verifies numerically (for modest sizes) that the permutation
/// matrix eigenphases match the ladder. Throws std::invalid_argument if
/// `perm` is not a permutation.
CycleSpectrum cycle_spectrum(const std::vector<int>& perm, double delta_t = 1.0,
                             const std::vector<double>& offsets = {});

}  // namespace lhv

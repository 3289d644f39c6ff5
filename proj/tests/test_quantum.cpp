#include "lhv/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"

using namespace lhv;
using std::numbers::pi;

namespace {

ModelSpec pair_spec(long long L0, long long L1, int sign = +1) {
  ModelSpec spec;
  spec.n_primary = 2;
  spec.periods = {L0, L1};
  spec.crossings = {{0, 1, 0, 0, sign}};
  return spec;
}

Generator random_antisymmetric(int dim, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Generator g(dim);
  for (int r = 1; r < dim; ++r) {
    for (int c = 0; c < r; ++c) g.set(r, c, dist(rng));
  }
  return g;
}

HermitianMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd a(dim, dim), b(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      a(r, c) = dist(rng);
      b(r, c) = dist(rng);
    }
  }
  HermitianMatrix h;
  h.sym = 0.5 * (a + a.transpose());
  h.antisym = 0.5 * (b - b.transpose());
  return h;
}

}  // namespace

TEST_CASE("build_generator: direct coupling values") {
  const Generator g = build_generator(pair_spec(11, 13));
  CHECK(g(1, 0) == doctest::Approx(pi / 286.0).epsilon(1e-15));
  CHECK(g(0, 1) == -g(1, 0));
  CHECK(g(0, 0) == 0.0);

  const auto exact = build_generator_exact(pair_spec(11, 13));
  CHECK(exact[0] == PiRational{1, 286});
}

TEST_CASE("build_generator: no crossings and cancelling signs") {
  ModelSpec spec = pair_spec(3, 5);
  spec.crossings.clear();
  CHECK(build_generator(spec)(1, 0) == 0.0);

  spec.crossings = {{0, 1, 0, 0, +1}, {0, 1, 1, 2, -1}};
  CHECK(build_generator(spec)(1, 0) == 0.0);
}

TEST_CASE("generator storage is antisymmetric by construction") {
  std::mt19937_64 rng(3);
  const Generator g = random_antisymmetric(6, rng, 1.0);
  const Eigen::MatrixXd m = g.matrix();
  CHECK((m + m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(m.diagonal().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("evolve: planar rotation closed form") {
  Generator g(2);
  const double omega = 0.37;
  g.set(1, 0, omega);
  Eigen::VectorXd psi0(2);
  psi0 << 1.0, 0.0;
  const auto waves = evolve(g, psi0, {0, 1, 5, 12});
  for (size_t k = 0; k < 4; ++k) {
    const double t = std::vector<double>{0, 1, 5, 12}[k];
    CHECK(waves[k](0) == doctest::Approx(std::cos(omega * t)).epsilon(1e-12));
    CHECK(waves[k](1) == doctest::Approx(std::sin(omega * t)).epsilon(1e-12));
  }
}

TEST_CASE("evolve: zero generator is the identity flow") {
  Generator g(3);
  Eigen::VectorXd psi0(3);
  psi0 << 0.6, 0.0, 0.8;
  for (const auto& psi : evolve(g, psi0, {0, 3, 100})) {
    CHECK((psi - psi0).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("evolve: the L=(3,5) pair reaches full swap at t=15") {
  const Generator g = build_generator(pair_spec(3, 5));
  CHECK(g(1, 0) == doctest::Approx(pi / 30.0).epsilon(1e-15));
  Eigen::VectorXd psi0(2);
  psi0 << 1.0, 0.0;
  const auto waves = evolve(g, psi0, {15});
  CHECK(waves[0](0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(waves[0](1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evolve preserves norm and is orthogonal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 3 + static_cast<int>(rng() % 6);
    const Generator g = random_antisymmetric(dim, rng, 0.5);
    Eigen::VectorXd psi0 = Eigen::VectorXd::Zero(dim);
    psi0(0) = 1.0;
    for (const auto& psi : evolve(g, psi0, {1, 10, 57})) {
      CHECK(std::abs(psi.norm() - 1.0) <= 1e-9);
    }
    // forward then backward flow composes to the identity
    const Eigen::MatrixXd m = g.matrix();
    const Eigen::MatrixXd round_trip =
        ((m * 13.0).exp() * (m * -13.0).exp()).eval();
    CHECK((round_trip - Eigen::MatrixXd::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() <= 1e-9);
  }
}

TEST_CASE("born: squares and c-bit recombination") {
  Eigen::VectorXd psi(2);
  psi << 0.6, 0.8;
  Eigen::VectorXd p = born(psi, false);
  CHECK(p(0) == doctest::Approx(0.36));
  CHECK(p(1) == doctest::Approx(0.64));

  Eigen::VectorXd doubled(4);
  doubled << 1.0, 0.0, 0.0, 0.0;
  p = born(doubled, true);
  CHECK(p(0) == 1.0);
  CHECK(p(1) == 0.0);

  Eigen::VectorXd odd(3);
  odd << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(born(odd, true), std::invalid_argument);
}

TEST_CASE("complexify: sigma_x block structure and born dynamics") {
  HermitianMatrix h;
  h.sym.resize(2, 2);
  h.sym << 0.0, 1.0, 1.0, 0.0;
  h.antisym = Eigen::MatrixXd::Zero(2, 2);
  const Generator g = complexify(h);
  Eigen::MatrixXd expected(4, 4);
  expected << 0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0;
  CHECK((g.matrix() - expected).cwiseAbs().maxCoeff() == 0.0);

  // oracle: direct complex evolution exp(-i sigma_x t) (1,0)
  Eigen::VectorXd psi0 = Eigen::VectorXd::Zero(4);
  psi0(0) = 1.0;
  for (long long t : {1LL, 2LL, 3LL, 7LL}) {
    const auto waves = evolve(g, psi0, {t});
    const Eigen::VectorXd p = born(waves[0], true);
    const double c = std::cos(static_cast<double>(t));
    CHECK(p(0) == doctest::Approx(c * c).epsilon(1e-9));
    CHECK(p(0) + p(1) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("complexify: 1x1 real energy is an invisible phase") {
  HermitianMatrix h;
  h.sym.resize(1, 1);
  h.sym << 0.71;
  h.antisym = Eigen::MatrixXd::Zero(1, 1);
  const Generator g = complexify(h);
  CHECK(g(0, 1) == 0.71);
  Eigen::VectorXd psi0(2);
  psi0 << 1.0, 0.0;
  for (const auto& psi : evolve(g, psi0, {1, 9, 40})) {
    const Eigen::VectorXd p = born(psi, true);
    CHECK(p(0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("complexify: purely imaginary Hermitian is block diagonal") {
  HermitianMatrix h;
  h.sym = Eigen::MatrixXd::Zero(2, 2);
  h.antisym.resize(2, 2);
  h.antisym << 0.0, -0.3, 0.3, 0.0;
  const Generator g = complexify(h);
  CHECK(g.matrix().topRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.matrix().bottomLeftCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
  CHECK((g.matrix().topLeftCorner(2, 2) - h.antisym).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("doubled real flow equals the complex Schroedinger flow") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 7);
    const HermitianMatrix h = random_hermitian(dim, rng);
    const Generator g = complexify(h);

    Eigen::VectorXcd psi0c(dim);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int i = 0; i < dim; ++i) psi0c(i) = {dist(rng), dist(rng)};
    psi0c.normalize();

    Eigen::VectorXd psi0(2 * dim);
    psi0 << psi0c.real(), psi0c.imag();

    const double t = 2.5;
    const Eigen::VectorXcd oracle =
        (std::complex<double>(0, -1) * h.complex() * t).exp() * psi0c;
    const Eigen::MatrixXd flow = (g.matrix() * t).exp();
    const Eigen::VectorXd psi = flow * psi0;
    for (int i = 0; i < dim; ++i) {
      CHECK(std::abs(psi(i) - oracle(i).real()) <= 1e-9);
      CHECK(std::abs(psi(i + dim) - oracle(i).imag()) <= 1e-9);
    }
  }
}

TEST_CASE("complexified spectrum doubles the Hermitian spectrum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 7);
    const HermitianMatrix h = random_hermitian(dim, rng);
    const Generator g = complexify(h);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(h.complex());
    Eigen::ComplexEigenSolver<Eigen::MatrixXd> gs(g.matrix());

    std::vector<double> h_eigs, g_eigs;
    for (int i = 0; i < dim; ++i) {
      h_eigs.push_back(hs.eigenvalues()(i));
      h_eigs.push_back(hs.eigenvalues()(i));
    }
    for (int i = 0; i < 2 * dim; ++i) {
      CHECK(std::abs(gs.eigenvalues()(i).real()) <= 1e-9);
      g_eigs.push_back(gs.eigenvalues()(i).imag());
    }
    // eigenvalues of G are +-i lambda; compare |.| multisets
    for (double& v : h_eigs) v = std::abs(v);
    for (double& v : g_eigs) v = std::abs(v);
    std::sort(h_eigs.begin(), h_eigs.end());
    std::sort(g_eigs.begin(), g_eigs.end());
    for (size_t i = 0; i < h_eigs.size(); ++i) {
      CHECK(std::abs(h_eigs[i] - g_eigs[i]) <= 1e-9);
    }
  }
}

TEST_CASE("cycle_spectrum: fixed points, one 4-cycle, mixed cycles") {
  auto spectrum = cycle_spectrum({0, 1, 2});
  CHECK(spectrum.cycles.size() == 3);
  for (const Cycle& c : spectrum.cycles) {
    CHECK(c.period == 1);
    CHECK(c.energies == std::vector<double>{0.0});
  }

  spectrum = cycle_spectrum({1, 2, 3, 0});
  REQUIRE(spectrum.cycles.size() == 1);
  const auto& e = spectrum.cycles[0].energies;
  REQUIRE(e.size() == 4);
  CHECK(e[0] == doctest::Approx(0.0));
  CHECK(e[1] == doctest::Approx(pi / 2.0));
  CHECK(e[2] == doctest::Approx(pi));
  CHECK(e[3] == doctest::Approx(3.0 * pi / 2.0));

  spectrum = cycle_spectrum({1, 2, 0, 4, 3});
  REQUIRE(spectrum.cycles.size() == 2);
  CHECK(spectrum.cycles[0].period == 3);
  CHECK(spectrum.cycles[1].period == 2);
  CHECK(spectrum.cycles[0].energies[1] == doctest::Approx(2.0 * pi / 3.0));
  CHECK(spectrum.cycles[1].energies[1] == doctest::Approx(pi));
}

TEST_CASE("cycle_spectrum: gaps scale with delta_t, offsets shift") {
  const auto spectrum = cycle_spectrum({1, 2, 3, 0}, 0.5, {1.25});
  const auto& e = spectrum.cycles[0].energies;
  CHECK(e[1] - e[0] == doctest::Approx(2.0 * pi / (4.0 * 0.5)));
  CHECK(e[0] == doctest::Approx(1.25));
}

TEST_CASE("cycle_spectrum rejects non-permutations") {
  CHECK_THROWS_AS(cycle_spectrum({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_spectrum({0, 3}), std::invalid_argument);
}

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "eic/constants.hpp"
#include "eic/error.hpp"
#include "eic/liouvillian.hpp"
#include "eic/scheme.hpp"

using namespace eic;

namespace {

// Probe amplitudes giving the stated Rabi frequencies on the probe transitions.
cd electric_for(const LevelScheme& s, double rabi) { return rabi * PhysicalConstants::hbar / s.electric_probe().moment; }
cd magnetic_for(const LevelScheme& s, double rabi) { return rabi * PhysicalConstants::hbar / s.magnetic_probe().moment; }

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto log_between = [&](double lo, double hi) { return lo * std::pow(hi / lo, u(rng)); };
  ModelParams p;
  p.gamma3 = log_between(1e5, 1e8);
  p.gamma5 = log_between(1e5, 1e8);
  p.gammaP = log_between(1e4, 1e8);
  p.omega1 = std::polar(log_between(1e4, 1e7), 2.0 * kPi * u(rng));
  p.omega2 = std::polar(log_between(1e4, 1e7), 2.0 * kPi * u(rng));
  p.omega_c = std::polar(log_between(1e4, 1e8), 2.0 * kPi * u(rng));
  p.probe_detuning = (u(rng) - 0.5) * 2e5;
  return p;
}

LevelScheme two_level(double gamma, double rabi) {
  LevelScheme s;
  s.levels = {{1, 0.0, 0}, {2, 0.0, 1}};
  s.transitions = {{1, 2, TransitionKind::ElectricDipole, 0.0}};
  s.drives = {{1, 2, {rabi, 0.0}, 0.0}};
  s.decays = {{2, 1, gamma}};
  s.reference_rate = gamma;
  validate(s);
  return s;
}

// exp(G t) from one RK4 step of length h raised to 2^squarings.
CMatrix rk4_propagator(const CMatrix& g, double h, int squarings) {
  const auto n = g.rows();
  const CMatrix a = h * g;
  CMatrix term = CMatrix::Identity(n, n);
  CMatrix p = term;
  for (int k = 1; k <= 4; ++k) {
    term = term * a / static_cast<double>(k);
    p += term;
  }
  for (int k = 0; k < squarings; ++k) p = p * p;
  return p;
}

}  // namespace

TEST_CASE("rotating-frame Hamiltonian") {
  ModelParams p;
  p.probe_detuning = 3.0e4;
  p.raman_detuning = -2.0e5;
  p.omega1 = p.omega2 = p.omega_c = 0.0;
  const LevelScheme s = build_five_level_scheme(p);
  const CMatrix h = build_hamiltonian(s, 0.0, 0.0, p.probe_detuning);
  const double expected[5] = {0.0, -3.0e4, -3.0e4, 0.0, 2.0e5};
  for (int k = 0; k < 5; ++k) CHECK(h(k, k) == cd{expected[k], 0.0});
  CHECK((h - CMatrix(h.diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("Hamiltonian is Hermitian for any drive phases") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const LevelScheme s = build_five_level_scheme(random_params(rng));
    const CMatrix h = build_hamiltonian(s, electric_for(s, 37.0), magnetic_for(s, -12.0), s.probe_detuning);
    CHECK((h - h.adjoint()).norm() == 0.0);
  }
}

TEST_CASE("drive couplings and the dark superposition") {
  const LevelScheme s = build_five_level_scheme({});
  const CMatrix h = build_hamiltonian(s, 0.0, 0.0, 0.0);
  CHECK(h(4, 0) == cd{-0.5e6, 0.0});
  CHECK(h(4, 3) == cd{-0.5e6, 0.0});
  CHECK(h(2, 1) == cd{0.0, -0.5e7});
  CHECK(h(1, 2) == cd{0.0, 0.5e7});
  CVector dark = CVector::Zero(5);
  dark(0) = 1.0 / std::sqrt(2.0);
  dark(3) = -1.0 / std::sqrt(2.0);
  CHECK((h * dark).norm() < 1e-9);
}

TEST_CASE("single decay channel") {
  const double gamma = 2.5e3;
  const DecayChannel decay[] = {{2, 1, gamma}};
  const Generator g = build_generator(CMatrix::Zero(2, 2), decay, {});
  CHECK(g.matrix(vec_index(2, 2, 2), vec_index(2, 2, 2)) == cd{-gamma, 0.0});
  CHECK(g.matrix(vec_index(1, 1, 2), vec_index(2, 2, 2)) == cd{gamma, 0.0});
  CHECK(g.matrix(vec_index(1, 2, 2), vec_index(1, 2, 2)) == cd{-0.5 * gamma, 0.0});
  Eigen::ComplexEigenSolver<CMatrix> es(g.matrix);
  bool found = false;
  for (const auto& lambda : es.eigenvalues()) found = found || std::abs(lambda + gamma) < 1e-9;
  CHECK(found);
  const DensityMatrix rho = steady_state(g);
  CHECK(std::abs(rho(1, 1) - 1.0) < 1e-14);
  CHECK(std::abs(rho(2, 2)) < 1e-14);
}

TEST_CASE("phenomenological dephasing touches only its coherence pair") {
  const double rate = 7.0e6;
  const DephasingEntry dephase[] = {{1, 2, rate}};
  const Generator g = build_generator(CMatrix::Zero(3, 3), {}, dephase);
  CHECK(g.matrix(vec_index(1, 2, 3), vec_index(1, 2, 3)) == cd{-rate, 0.0});
  CHECK(g.matrix(vec_index(2, 1, 3), vec_index(2, 1, 3)) == cd{-rate, 0.0});
  CHECK(g.matrix.cwiseAbs().sum() == doctest::Approx(2.0 * rate));
}

TEST_CASE("generator preserves the trace") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    ModelParams p = random_params(rng);
    p.strict_lindblad = k % 2 == 1;
    const LevelScheme s = build_five_level_scheme(p);
    const Generator g = build_generator(s, electric_for(s, 50.0), magnetic_for(s, 20.0), s.probe_detuning);
    Eigen::RowVectorXcd functional = Eigen::RowVectorXcd::Zero(25);
    for (int i = 1; i <= 5; ++i) functional(vec_index(i, i, 5)) = 1.0;
    CHECK((functional * g.matrix).norm() <= 1e-10 * g.matrix.norm());
  }
}

TEST_CASE("spectrum of the generator is non-expanding") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    ModelParams p = random_params(rng);
    p.strict_lindblad = k % 2 == 1;
    const LevelScheme s = build_five_level_scheme(p);
    const Generator g = build_generator(s, electric_for(s, 100.0), magnetic_for(s, 100.0), s.probe_detuning);
    Eigen::ComplexEigenSolver<CMatrix> es(g.matrix, false);
    CHECK(es.eigenvalues().real().maxCoeff() <= 1e-10 * g.matrix.norm());
  }
}

TEST_CASE("probe-free steady state is the dark state") {
  const LevelScheme s = build_five_level_scheme({});
  const Generator g = build_generator(s, 0.0, 0.0, 0.0);
  const DensityMatrix rho = steady_state(g);
  CHECK(std::abs(rho(1, 1) - 0.5) < 1e-9);
  CHECK(std::abs(rho(4, 4) - 0.5) < 1e-9);
  CHECK(std::abs(rho(1, 4) + 0.5) < 1e-9);
  for (int i : {2, 3, 5}) CHECK(std::abs(rho(i, i)) < 1e-9);

  // Independent route: propagate |1><1| to t = 2^24 * 10 ns.
  CVector start = CVector::Zero(25);
  start(vec_index(1, 1, 5)) = 1.0;
  const CVector late = rk4_propagator(g.matrix, 1e-8, 24) * start;
  CHECK((late - rho.vec()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("driven two-level saturation") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double gamma = 1e6;
    const double rabi = gamma * std::pow(10.0, 1.5 * u(rng));
    const double detuning = 3.0 * gamma * u(rng);
    const LevelScheme s = two_level(gamma, rabi);
    const DensityMatrix rho = steady_state(build_generator(s, 0.0, 0.0, detuning));
    const double expected =
        0.25 * rabi * rabi / (detuning * detuning + 0.25 * gamma * gamma + 0.5 * rabi * rabi);
    CHECK(std::abs(rho(2, 2).real() - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("steady-state invariants over random parameters") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    const ModelParams p = random_params(rng);
    const LevelScheme s = build_five_level_scheme(p);
    const Generator g = build_generator(s, electric_for(s, 30.0), magnetic_for(s, 30.0), p.probe_detuning);
    const DensityMatrix rho = steady_state(g);
    CHECK(rho.hermiticity_error() < 1e-12);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
    CHECK(relative_residual(g, rho) < 1e-10);
  }
}

TEST_CASE("strict Lindblad steady states are positive") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 20; ++k) {
    ModelParams p = random_params(rng);
    p.strict_lindblad = true;
    const LevelScheme s = build_five_level_scheme(p);
    const DensityMatrix rho =
        steady_state(build_generator(s, electric_for(s, 500.0), magnetic_for(s, 500.0), p.probe_detuning));
    const CMatrix herm = 0.5 * (rho.entries + rho.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("common phase of the Raman pair is a gauge") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 10; ++k) {
    ModelParams p = random_params(rng);
    const LevelScheme s0 = build_five_level_scheme(p);
    const cd e = electric_for(s0, 40.0), b = magnetic_for(s0, 40.0);
    const DensityMatrix a = steady_state(build_generator(s0, e, b, p.probe_detuning));
    const cd phase = std::polar(1.0, 0.3 + k);
    p.omega1 *= phase;
    p.omega2 *= phase;
    const DensityMatrix c = steady_state(build_generator(build_five_level_scheme(p), e, b, p.probe_detuning));
    CHECK((a.entries.cwiseAbs() - c.entries.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("degenerate generator is reported") {
  ModelParams p;
  p.omega1 = p.omega2 = p.omega_c = 0.0;
  const LevelScheme s = build_five_level_scheme(p);
  // Undriven: populations of |1>, |4> and the coherence pair rho_14, rho_41 are all stationary.
  try {
    SteadyStateSolver solver(build_generator(s, 0.0, 0.0, 0.0));
    FAIL("expected DegenerateSteadyState");
  } catch (const DegenerateSteadyState& e) {
    CHECK(e.rank() == 21);
    CHECK(e.unknowns() == 25);
  }
}

TEST_CASE("vectorization round trip") {
  CMatrix m(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) m(i, j) = cd(i + 1, 10 * (j + 1));
  const DensityMatrix rho{m};
  const CVector v = rho.vec();
  CHECK(v(vec_index(2, 3, 3)) == m(1, 2));
  CHECK((DensityMatrix::from_vec(v, 3).entries - m).norm() == 0.0);
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "eic/constants.hpp"
#include "eic/error.hpp"
#include "eic/constitutive.hpp"
#include "eic/response.hpp"

using namespace eic;

namespace {

using PC = PhysicalConstants;

double rel(cd a, cd b) { return std::abs(a - b) / std::abs(b); }

MicroInputs defaults_at(double density_m3, double detuning = -25e3) {
  const ModelParams p;
  const LevelScheme s = build_five_level_scheme(p);
  return {linear_response(s, detuning), density_m3, s.electric_probe().moment, s.magnetic_probe().moment};
}

}  // namespace

TEST_CASE("refractive index of simple media") {
  SUBCASE("vacuum") {
    const auto r = refractive_index(MacroCoefficients::from_susceptibilities(0.0, 0.0, 0.0, 0.0));
    CHECK(r.n == cd{1.0, 0.0});
    CHECK(r.branch_sign == 1);
    CHECK(std::isinf(r.fom));
  }
  SUBCASE("lossless dielectric") {
    const auto r = refractive_index(MacroCoefficients::from_susceptibilities(1.25, 0.0, 0.0, 0.0));
    CHECK(std::abs(r.n - 1.5) < 1e-15);
  }
  SUBCASE("strong chirality reaches n = -1") {
    const auto r = refractive_index(MacroCoefficients::from_susceptibilities(0.0, 0.0, {0.0, 2.0}, {0.0, -2.0}));
    CHECK(std::abs(r.n + 1.0) < 1e-15);
  }
  SUBCASE("negative radicand takes the absorbing root") {
    const auto r = refractive_index(MacroCoefficients::from_susceptibilities(-2.0, 0.0, 0.0, 0.0));
    CHECK(std::abs(r.n - cd{0.0, 1.0}) < 1e-15);
    const auto m = refractive_index(MacroCoefficients::from_susceptibilities({-2.0, -0.0}, 0.0, 0.0, 0.0));
    CHECK(std::abs(m.n - cd{0.0, 1.0}) < 1e-15);
  }
  SUBCASE("figure of merit") {
    const auto r = refractive_index(MacroCoefficients::from_susceptibilities({-3.0, 0.5}, 0.0, 0.0, 0.0));
    CHECK(r.fom == doctest::Approx(-r.n.real() / r.n.imag()));
  }
}

TEST_CASE("chiral index reduces to sqrt(eps mu) - xi") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const cd eps{0.1 + 3.0 * u(rng), 0.2 * u(rng)};
    const cd mu{0.1 + 3.0 * u(rng), 0.2 * u(rng)};
    const double xi = 4.0 * u(rng);
    const auto r = refractive_index(MacroCoefficients::from_susceptibilities(eps - 1.0, mu - 1.0, {0.0, xi}, {0.0, -xi}));
    CHECK(std::abs(r.n - (std::sqrt(eps * mu) - xi)) < 1e-9);
  }
}

TEST_CASE("root branch always has non-negative imaginary part") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g(0.0, 2.0);
  for (int k = 0; k < 500; ++k) {
    const auto m = MacroCoefficients::from_susceptibilities({g(rng), g(rng)}, {g(rng), g(rng)}, 0.0, 0.0);
    const auto r = refractive_index(m);
    CHECK(r.n.imag() >= 0.0);
    CHECK(std::abs(r.n * r.n - m.epsilon * m.mu) < 1e-12 * std::max(1.0, std::abs(m.epsilon * m.mu)));
  }
}

TEST_CASE("local field: Clausius-Mossotti without cross terms") {
  ResponseTensor t;
  t.ee = {2e-6, 5e-6};
  t.hh = {1e-3, 4e-3};
  const double d = 1.2e-29, mu = 2.6e-23, n = 4e23;
  const auto m = local_field_solve({t, n, d, mu});
  const cd x = n * d * t.ee / PC::epsilon0;
  const cd y = n * mu * t.hh * PC::mu0;
  CHECK(rel(m.chi_e, x / (1.0 - x / 3.0)) < 1e-13);
  CHECK(rel(m.chi_m, y / (1.0 - y / 3.0)) < 1e-13);
  CHECK(m.xi_eh == cd{});
  CHECK(m.xi_he == cd{});
  CHECK(m.epsilon == 1.0 + m.chi_e);
  CHECK(m.mu == 1.0 + m.chi_m);
}

TEST_CASE("local field: dilute limit is first order") {
  const auto in = defaults_at(1e18);  // 1e12 cm^-3
  const auto m = local_field_solve(in);
  const auto& t = in.tensor;
  const double n = in.density;
  CHECK(rel(m.chi_e, n * in.electric_moment * t.ee / PC::epsilon0) < 1e-2);
  CHECK(rel(m.chi_m, n * in.magnetic_moment * t.hh * PC::mu0) < 1e-2);
  CHECK(rel(m.xi_eh, PC::c * n * in.electric_moment * t.eh * PC::mu0) < 1e-2);
  CHECK(rel(m.xi_he, PC::c * PC::mu0 * n * in.magnetic_moment * t.he) < 1e-2);
}

TEST_CASE("local field: linear in density when dilute") {
  for (double n : {1e16, 1e17, 1e18, 1e19}) {
    const auto a = local_field_solve(defaults_at(n));
    const auto b = local_field_solve(defaults_at(2.0 * n));
    CHECK(std::abs(b.chi_e / a.chi_e - 2.0) < 2e-2);
    CHECK(std::abs(b.xi_he / a.xi_he - 2.0) < 2e-2);
  }
}

TEST_CASE("local field: singular self-consistency") {
  ResponseTensor t;
  const double d = 1e-29, n = 1e22;
  t.ee = 3.0 * PC::epsilon0 / (n * d);
  CHECK_THROWS_AS(local_field_solve({t, n, d, 1e-23}), SingularSystem);
  CHECK_THROWS_AS(local_field_solve({t, 0.0, d, 1e-23}), InvalidParameter);
}

TEST_CASE("lens tolerance") {
  CHECK(lens_tolerance(0.0, 1e-3) == 0.0);
  CHECK(lens_tolerance(std::numeric_limits<double>::infinity(), 1e-3) == 1.0);
  CHECK(lens_tolerance(2.0 * kPi * 5e-6, 5e-6) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  CHECK(lens_tolerance(1e-7, 1e-3) < lens_tolerance(2e-7, 1e-3));
  CHECK_THROWS_AS(lens_tolerance(1e-7, 0.0), InvalidParameter);
  CHECK_THROWS_AS(lens_tolerance(-1.0, 1.0), InvalidParameter);
}

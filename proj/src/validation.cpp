#include "eic/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "eic/analytic.hpp"
#include "eic/constants.hpp"
#include "eic/response.hpp"

namespace eic {

namespace {

double rel(cd a, cd b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double max_rel(const ResponseTensor& a, const ResponseTensor& b) {
  return std::max({rel(a.ee, b.ee), rel(a.eh, b.eh), rel(a.he, b.he), rel(a.hh, b.hh)});
}

CheckResult below(std::string name, double measured, double threshold) {
  return {std::move(name), measured <= threshold, measured, threshold};
}

}  // namespace

std::vector<CheckResult> run_self_checks(const ModelParams& params) {
  std::vector<CheckResult> out;
  const double g2 = params.gamma2;
  const LevelScheme scheme = build_five_level_scheme(params);

  {
    const Generator g = build_generator(scheme, 0.0, 0.0, params.probe_detuning);
    const DensityMatrix rho = steady_state(g);
    out.push_back(below("steady state hermiticity", rho.hermiticity_error(), 1e-12));
    out.push_back(below("steady state trace error", std::abs(rho.trace() - 1.0), 1e-12));
    out.push_back(below("steady state relative residual", relative_residual(g, rho), 1e-10));
    const double excited = std::max({std::abs(rho(2, 2)), std::abs(rho(3, 3)), std::abs(rho(5, 5))});
    out.push_back(below("dark state: excited populations", excited, 1e-9));
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 21; ++k) {
      const double delta = (-100.0 + 10.0 * k) * g2;
      const auto lr = linear_response(scheme, delta);
      const auto fd = finite_difference_response(scheme, delta, default_fd_rabi_scale(scheme));
      worst = std::max(worst, max_rel(fd, lr));
    }
    out.push_back(below("perturbative vs finite-difference response", worst, 1e-6));
  }

  {
    std::mt19937_64 rng(20061014);
    std::uniform_real_distribution<double> log_rabi(0.0, 4.0), det(-1e3, 1e3), phase(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const cd oc = std::polar(std::pow(10.0, log_rabi(rng)) * g2, phase(rng));
      const double delta = det(rng) * g2;
      const auto s3 = build_three_level_scheme(g2, params.gamma3, params.gammaP, oc, delta, params.wavelength);
      ThreeLevelParams tp{0.5 * params.gamma3, 0.5 * g2 + params.gammaP, oc, delta,
                          s3.electric_probe().moment, s3.magnetic_probe().moment};
      worst = std::max(worst, max_rel(linear_response(s3, delta), three_level_response(tp)));
    }
    out.push_back(below("three-level numerical vs closed form", worst, 1e-8));
  }

  {
    const auto base = linear_response(scheme, params.probe_detuning);
    double worst = 0.0;
    for (double phi : {kPi / 4, kPi / 2, kPi}) {
      ModelParams rotated = params;
      rotated.omega_c *= std::polar(1.0, phi);
      const auto r = linear_response(build_five_level_scheme(rotated), params.probe_detuning);
      worst = std::max({worst, rel(r.eh, base.eh * std::polar(1.0, phi)), rel(r.he, base.he * std::polar(1.0, -phi)),
                        rel(r.ee, base.ee), rel(r.hh, base.hh)});
    }
    out.push_back(below("Omega_c phase covariance", worst, 1e-10));
  }

  {
    ModelParams off = params;
    off.omega_c = 0.0;
    const double on_abs = std::abs(linear_response(scheme, 0.0).ee.imag());
    const double off_abs = std::abs(linear_response(build_five_level_scheme(off), 0.0).ee.imag());
    out.push_back(below("EIT suppression of Im alpha_EE at resonance", on_abs / off_abs, 1e-2));
  }
  return out;
}

}  // namespace eic

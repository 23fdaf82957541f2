#pragma once

#include "eic/liouvillian.hpp"
#include "eic/scheme.hpp"

namespace eic {

/// Linear response of the probe coherences. With rho_e the electric-probe
/// coherence (rho_34 in the five-level scheme) and rho_m the magnetic one
/// (rho_21):  rho_e = ee E + eh B,  rho_m = he E + hh B.
/// ee, he are per V/m; eh, hh are per T.
struct ResponseTensor {
  cd ee{};
  cd eh{};
  cd he{};
  cd hh{};
  double detuning = 0.0;
};

/// Everything the perturbative solve produces, for inspection in tests.
struct LinearResponseDetail {
  DensityMatrix rho0;
  CMatrix rho1_electric;  // d rho / dE at unit real amplitude
  CMatrix rho1_magnetic;  // d rho / dB
  ResponseTensor tensor;
};

/// First-order perturbation in the probe amplitudes about the probe-free
/// steady state. `probe_phase` rotates the internal unit amplitudes; the
/// extracted coefficients are un-rotated so the tensor does not depend on it.
LinearResponseDetail linear_response_detail(const LevelScheme& scheme, double detuning,
                                            double probe_phase = 0.0);

ResponseTensor linear_response(const LevelScheme& scheme, double detuning);
inline ResponseTensor linear_response(const LevelScheme& scheme) {
  return linear_response(scheme, scheme.probe_detuning);
}

/// Central differences of full nonlinear steady states at +/- amplitude,
/// E alone then B alone. `rabi_scale` is the probe Rabi frequency (rad/s)
/// used for both probes.
ResponseTensor finite_difference_response(const LevelScheme& scheme, double detuning, double rabi_scale);

/// Default finite-difference Rabi scale: 1e-3 of the scheme's reference rate.
double default_fd_rabi_scale(const LevelScheme& scheme);

}  // namespace eic

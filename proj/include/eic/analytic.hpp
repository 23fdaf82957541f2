#pragma once

#include "eic/response.hpp"

namespace eic {

/// Closed-form three-level model: ground |1>, E probe on 1-3, B probe on
/// 1-2, coupling Omega_c on 2-3, all population in |1>.
struct ThreeLevelParams {
  double gamma31 = 0.0;  // coherence decay of rho_31, 1/s
  double gamma21 = 0.0;  // coherence decay of rho_21, 1/s
  cd omega_c{};
  double detuning = 0.0;
  double d31 = 0.0;   // C m
  double mu21 = 0.0;  // J/T
};

/// Cramer solution of
///   (g31 - i D) r31 - i (Oc/2)  r21 = i Om_E/2
///   (g21 - i D) r21 - i (Oc*/2) r31 = i Om_B/2
/// at unit probe fields. Throws SingularSystem when the determinant vanishes.
ResponseTensor three_level_response(const ThreeLevelParams& p);

/// Two-level dipole polarizability (i moment^2 / 2 hbar) / (gamma/2 - i D):
/// C m^2/V for electric moments, J/T^2 for magnetic ones. Equals moment times
/// the corresponding coherence response.
cd two_level_lorentzian(double gamma, double detuning, double moment, TransitionKind kind);

}  // namespace eic

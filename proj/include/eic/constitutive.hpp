#pragma once

#include "eic/response.hpp"

namespace eic {

/// Macroscopic constitutive coefficients, all dimensionless:
///   P = eps0 chi_e E + (xi_eh / c) H
///   M = (xi_he / (c mu0)) E + chi_m H
struct MacroCoefficients {
  cd chi_e{};
  cd chi_m{};
  cd xi_eh{};
  cd xi_he{};
  cd epsilon{1.0, 0.0};
  cd mu{1.0, 0.0};

  static MacroCoefficients from_susceptibilities(cd chi_e, cd chi_m, cd xi_eh, cd xi_he);
};

struct IndexResult {
  cd n{1.0, 0.0};
  int branch_sign = 1;  // -1 when the principal root was negated
  double fom = 0.0;     // -Re n / Im n; +inf when Im n <= 1e-300
};

struct MicroInputs {
  ResponseTensor tensor;
  double density = 0.0;          // 1/m^3
  double electric_moment = 0.0;  // d34, C m
  double magnetic_moment = 0.0;  // mu21, J/T
};

/// Solves the first-order local-field self-consistency
///   P = N d  [ee (E + P/3eps0) + eh mu0 (H + M/3)]
///   M = N mu [he (E + P/3eps0) + hh mu0 (H + M/3)]
/// for P(E,H) and M(E,H), then reads off the constitutive coefficients.
/// B = mu0 H is the only place mu0 enters the microscopic coupling.
MacroCoefficients local_field_solve(const MicroInputs& in);

/// n = sqrt(eps mu - (xi_eh + xi_he)^2 / 4) + (i/2)(xi_eh - xi_he), root
/// taken with Im >= 0.
IndexResult refractive_index(const MacroCoefficients& m);

/// Index accuracy needed around n = -1 for resolution `resolution` with a
/// slab of thickness `thickness`: 1 - exp(-resolution / (2 pi thickness)).
double lens_tolerance(double resolution, double thickness);

}  // namespace eic

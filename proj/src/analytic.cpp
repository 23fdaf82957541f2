#include "eic/analytic.hpp"

#include <cmath>

#include "eic/constants.hpp"
#include "eic/error.hpp"

namespace eic {

ResponseTensor three_level_response(const ThreeLevelParams& p) {
  if (!(p.gamma31 > 0.0) || !(p.gamma21 >= 0.0))
    throw InvalidParameter("three_level_response: need gamma31 > 0 and gamma21 >= 0");
  const cd i{0.0, 1.0};
  const double hbar = PhysicalConstants::hbar;
  const cd a = p.gamma31 - i * p.detuning;
  const cd b = p.gamma21 - i * p.detuning;
  const cd det = a * b + 0.25 * std::norm(p.omega_c);
  if (det == cd{}) throw SingularSystem("three-level coherence system is singular", det);

  // Om_E = d31 E / hbar, Om_B = mu21 B / hbar at E = B = 1.
  const double om_e = p.d31 / hbar;
  const double om_b = p.mu21 / hbar;
  ResponseTensor t;
  t.detuning = p.detuning;
  t.ee = i * om_e * b / (2.0 * det);
  t.eh = -p.omega_c * om_b / (4.0 * det);
  t.he = -std::conj(p.omega_c) * om_e / (4.0 * det);
  t.hh = i * om_b * a / (2.0 * det);
  return t;
}

cd two_level_lorentzian(double gamma, double detuning, double moment, TransitionKind /*kind*/) {
  if (!(gamma > 0.0)) throw InvalidParameter("two_level_lorentzian: gamma must be > 0");
  const cd i{0.0, 1.0};
  return i * moment * moment / (2.0 * PhysicalConstants::hbar) / (0.5 * gamma - i * detuning);
}

}  // namespace eic

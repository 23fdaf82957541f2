#include "eic/constitutive.hpp"

#include <cmath>
#include <limits>

#include "eic/constants.hpp"
#include "eic/error.hpp"

namespace eic {

namespace {

using PC = PhysicalConstants;

bool finite(cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

MacroCoefficients MacroCoefficients::from_susceptibilities(cd chi_e, cd chi_m, cd xi_eh, cd xi_he) {
  return {chi_e, chi_m, xi_eh, xi_he, 1.0 + chi_e, 1.0 + chi_m};
}

MacroCoefficients local_field_solve(const MicroInputs& in) {
  if (!(in.density > 0.0) || !std::isfinite(in.density))
    throw InvalidParameter("local_field_solve: density must be > 0");
  const auto& t = in.tensor;
  const double n = in.density;

  // Response of P and M to the local fields (E_m, H_m).
  const cd k_pe = n * in.electric_moment * t.ee;
  const cd k_ph = n * in.electric_moment * t.eh * PC::mu0;
  const cd k_me = n * in.magnetic_moment * t.he;
  const cd k_mh = n * in.magnetic_moment * t.hh * PC::mu0;

  // [1 - k_pe/3eps0, -k_ph/3; -k_me/3eps0, 1 - k_mh/3] [P; M] = K [E; H]
  const cd a11 = 1.0 - k_pe / (3.0 * PC::epsilon0);
  const cd a12 = -k_ph / 3.0;
  const cd a21 = -k_me / (3.0 * PC::epsilon0);
  const cd a22 = 1.0 - k_mh / 3.0;
  const cd det = a11 * a22 - a12 * a21;
  // Both products are dimensionless; compare against their size.
  const double size = std::abs(a11 * a22) + std::abs(a12 * a21);
  if (!finite(det) || std::abs(det) <= 1e-14 * std::max(size, 1.0))
    throw SingularSystem("local-field self-consistency matrix is singular", det);

  const cd p_e = (a22 * k_pe - a12 * k_me) / det;
  const cd p_h = (a22 * k_ph - a12 * k_mh) / det;
  const cd m_e = (a11 * k_me - a21 * k_pe) / det;
  const cd m_h = (a11 * k_mh - a21 * k_ph) / det;

  return MacroCoefficients::from_susceptibilities(p_e / PC::epsilon0, m_h, PC::c * p_h, PC::c * PC::mu0 * m_e);
}

IndexResult refractive_index(const MacroCoefficients& m) {
  const cd xi_sum = m.xi_eh + m.xi_he;
  const cd radicand = m.epsilon * m.mu - 0.25 * xi_sum * xi_sum;
  cd root = std::sqrt(radicand);
  IndexResult r;
  // std::sqrt follows the sign of Im(radicand), including -0 on the cut.
  if (root.imag() < 0.0) {
    root = -root;
    r.branch_sign = -1;
  }
  r.n = root + cd{0.0, 0.5} * (m.xi_eh - m.xi_he);
  r.fom = r.n.imag() <= 1e-300 ? std::numeric_limits<double>::infinity() : -r.n.real() / r.n.imag();
  return r;
}

double lens_tolerance(double resolution, double thickness) {
  if (!(thickness > 0.0) || !std::isfinite(thickness))
    throw InvalidParameter("lens_tolerance: thickness must be > 0");
  if (!(resolution >= 0.0)) throw InvalidParameter("lens_tolerance: resolution must be >= 0");
  return 1.0 - std::exp(-resolution / (2.0 * kPi * thickness));
}

}  // namespace eic

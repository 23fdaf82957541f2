#pragma once

namespace eic {

/// SI constants (CODATA 2018). epsilon0 is derived from mu0 and c so that
/// c^2 epsilon0 mu0 = 1 holds to rounding.
struct PhysicalConstants {
  static constexpr double c = 299792458.0;           // m/s
  static constexpr double mu0 = 1.25663706212e-6;    // H/m
  static constexpr double epsilon0 = 1.0 / (mu0 * c * c);  // F/m
  static constexpr double hbar = 1.054571817e-34;    // J s
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

namespace units {

// Inputs arrive in cm^-3 and nm; everything internal is SI.
constexpr double per_cm3_to_per_m3(double n) { return n * 1e6; }
constexpr double per_m3_to_per_cm3(double n) { return n / 1e6; }
constexpr double nm_to_m(double x) { return x * 1e-9; }
constexpr double m_to_nm(double x) { return x / 1e-9; }

/// Angular frequency of light with vacuum wavelength `lambda` (m).
constexpr double angular_frequency(double lambda) {
  return 2.0 * kPi * PhysicalConstants::c / lambda;
}

}  // namespace units
}  // namespace eic

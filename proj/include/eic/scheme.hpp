#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace eic {

using cd = std::complex<double>;

enum class TransitionKind { ElectricDipole, MagneticDipole };

/// One atomic level. Its rotating-frame energy (rad/s) is
/// `frame_energy - probe_photons * probe_detuning`.
struct Level {
  int index = 0;
  double frame_energy = 0.0;
  int probe_photons = 0;
};

/// `moment` is C m for electric and J/T for magnetic transitions.
struct Transition {
  int lower = 0;
  int upper = 0;
  TransitionKind kind = TransitionKind::ElectricDipole;
  double moment = 0.0;
};

/// Coherent field on transition (lower, upper). Couples as
/// H[upper][lower] = -rabi/2.
struct DriveField {
  int lower = 0;
  int upper = 0;
  cd rabi{};
  double detuning = 0.0;  // informational; already folded into frame energies
};

/// Lindblad jump |to><from| at population rate `rate` (1/s). from == to is a
/// pure-dephasing jump on that level.
struct DecayChannel {
  int from = 0;
  int to = 0;
  double rate = 0.0;
};

/// Phenomenological damping of the two coherences rho_ij and rho_ji only.
struct DephasingEntry {
  int first = 0;
  int second = 0;
  double rate = 0.0;
};

struct LevelScheme {
  std::vector<Level> levels;
  std::vector<Transition> transitions;
  std::vector<DriveField> drives;
  std::vector<DecayChannel> decays;
  std::vector<DephasingEntry> dephasings;
  std::optional<std::size_t> probe_electric;  // index into `transitions`
  std::optional<std::size_t> probe_magnetic;
  double reference_rate = 0.0;  // gamma2, the natural rate unit of the scheme
  double probe_detuning = 0.0;  // rad/s; default for linear_response(scheme)

  int dim() const noexcept { return static_cast<int>(levels.size()); }
  const Transition& electric_probe() const;
  const Transition& magnetic_probe() const;
};

/// Throws ValidationError listing every violated invariant.
void validate(const LevelScheme& scheme);

/// Parameters of the five-level scheme, SI throughout. Default construction
/// gives the reference parameter set (gamma2 = 1e3/s, the rest scaled to it).
struct ModelParams {
  double gamma2 = 1e3;
  double gamma3 = 137.0 * 137.0 * 1e3;
  double gamma4 = 0.0;
  double gamma5 = 137.0 * 137.0 * 1e3;
  double gammaP = 1e4 * 1e3;
  cd omega1{1e6, 0.0};
  cd omega2{1e6, 0.0};
  cd omega_c{0.0, 1e4 * 1e3};  // 1e4 gamma2 e^{i pi/2}
  double density = 5e22;        // 1/m^3 (5e16 cm^-3)
  double wavelength = 600e-9;   // m
  double probe_detuning = 0.0;  // rad/s
  double raman_detuning = 0.0;  // one-photon detuning of |5>, rad/s
  double two_photon_detuning = 0.0;  // Raman pair, rad/s
  std::vector<std::pair<int, int>> dephasing_pairs{{1, 2}};
  bool strict_lindblad = false;  // route gammaP as a Lindblad jump on |2>

  bool operator==(const ModelParams&) const = default;
};

void validate(const ModelParams& params);

/// Transition moment implied by a radiative decay rate at wavelength lambda:
/// d = sqrt(3 pi eps0 hbar gamma c^3 / omega^3), and mu = c times that.
double dipole_from_decay(double gamma, double wavelength, TransitionKind kind);

/// Five-level scheme: Raman pair Omega1 (1,5), Omega2 (4,5) forming a dark
/// state of |1>,|4>; Omega_c on (2,3); probe E on (4,3), probe B on (1,2).
LevelScheme build_five_level_scheme(const ModelParams& params);

/// Three-level scheme: E on (1,3), B on (1,2), Omega_c on (2,3).
LevelScheme build_three_level_scheme(double gamma2, double gamma3, double gammaP,
                                     cd omega_c, double probe_detuning,
                                     double wavelength = 600e-9);

}  // namespace eic

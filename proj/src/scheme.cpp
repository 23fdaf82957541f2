#include "eic/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "eic/constants.hpp"
#include "eic/error.hpp"

namespace eic {

namespace {

using PC = PhysicalConstants;

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

bool has_level(const LevelScheme& s, int idx) { return idx >= 1 && idx <= s.dim(); }

void check_rate(std::vector<std::string>& out, const char* name, double r) {
  if (!std::isfinite(r)) out.push_back(cat(name, " is not finite"));
  else if (r < 0.0) out.push_back(cat(name, " = ", r, " is negative"));
}

void check_rabi(std::vector<std::string>& out, const char* name, cd r) {
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) out.push_back(cat(name, " is not finite"));
}

}  // namespace

const Transition& LevelScheme::electric_probe() const {
  if (!probe_electric || *probe_electric >= transitions.size())
    throw ValidationError({"scheme has no electric probe transition"});
  return transitions[*probe_electric];
}

const Transition& LevelScheme::magnetic_probe() const {
  if (!probe_magnetic || *probe_magnetic >= transitions.size())
    throw ValidationError({"scheme has no magnetic probe transition"});
  return transitions[*probe_magnetic];
}

void validate(const LevelScheme& s) {
  std::vector<std::string> v;

  std::set<int> seen;
  for (const auto& l : s.levels) {
    if (!seen.insert(l.index).second) v.push_back(cat("duplicate level index ", l.index));
    if (!std::isfinite(l.frame_energy)) v.push_back(cat("level ", l.index, " has non-finite frame energy"));
  }
  for (int i = 1; i <= s.dim(); ++i)
    if (!seen.count(i)) v.push_back(cat("level indices not contiguous from 1: missing ", i));

  for (const auto& t : s.transitions) {
    if (t.lower == t.upper) v.push_back(cat("transition (", t.lower, ",", t.upper, ") has lower == upper"));
    if (!has_level(s, t.lower) || !has_level(s, t.upper))
      v.push_back(cat("transition (", t.lower, ",", t.upper, ") references a missing level"));
    if (!(t.moment >= 0.0) || !std::isfinite(t.moment))
      v.push_back(cat("transition (", t.lower, ",", t.upper, ") moment ", t.moment, " invalid"));
  }

  for (const auto& d : s.drives) {
    const bool declared = std::any_of(s.transitions.begin(), s.transitions.end(), [&](const Transition& t) {
      return t.lower == d.lower && t.upper == d.upper;
    });
    if (!declared) v.push_back(cat("drive on (", d.lower, ",", d.upper, ") has no declared transition"));
    check_rabi(v, "drive Rabi frequency", d.rabi);
  }

  for (const auto& d : s.decays) {
    if (!has_level(s, d.from) || !has_level(s, d.to))
      v.push_back(cat("decay ", d.from, "->", d.to, " references a missing level"));
    check_rate(v, "decay rate", d.rate);
  }

  for (const auto& d : s.dephasings) {
    if (d.first == d.second) v.push_back(cat("dephasing pair (", d.first, ",", d.second, ") is not a coherence"));
    if (!has_level(s, d.first) || !has_level(s, d.second))
      v.push_back(cat("dephasing pair (", d.first, ",", d.second, ") references a missing level"));
    check_rate(v, "dephasing rate", d.rate);
  }

  if (s.probe_electric) {
    if (*s.probe_electric >= s.transitions.size()) v.push_back("electric probe index out of range");
    else if (s.transitions[*s.probe_electric].kind != TransitionKind::ElectricDipole)
      v.push_back("electric probe transition is not electric-dipole");
  }
  if (s.probe_magnetic) {
    if (*s.probe_magnetic >= s.transitions.size()) v.push_back("magnetic probe index out of range");
    else if (s.transitions[*s.probe_magnetic].kind != TransitionKind::MagneticDipole)
      v.push_back("magnetic probe transition is not magnetic-dipole");
  }

  if (!v.empty()) throw ValidationError(std::move(v));
}

void validate(const ModelParams& p) {
  std::vector<std::string> v;
  check_rate(v, "gamma2", p.gamma2);
  check_rate(v, "gamma3", p.gamma3);
  check_rate(v, "gamma4", p.gamma4);
  check_rate(v, "gamma5", p.gamma5);
  check_rate(v, "gammaP", p.gammaP);
  check_rabi(v, "omega1", p.omega1);
  check_rabi(v, "omega2", p.omega2);
  check_rabi(v, "omega_c", p.omega_c);
  if (!(p.density > 0.0) || !std::isfinite(p.density)) v.push_back(cat("density ", p.density, " must be > 0"));
  if (!(p.wavelength > 0.0) || !std::isfinite(p.wavelength))
    v.push_back(cat("wavelength ", p.wavelength, " must be > 0"));
  for (double x : {p.probe_detuning, p.raman_detuning, p.two_photon_detuning})
    if (!std::isfinite(x)) v.push_back("detuning is not finite");
  for (const auto& [i, j] : p.dephasing_pairs)
    if (i == j || i < 1 || i > 5 || j < 1 || j > 5) v.push_back(cat("bad dephasing pair (", i, ",", j, ")"));
  if (!v.empty()) throw ValidationError(std::move(v));
}

double dipole_from_decay(double gamma, double wavelength, TransitionKind kind) {
  if (!std::isfinite(gamma) || !std::isfinite(wavelength))
    throw InvalidParameter("dipole_from_decay: non-finite input");
  if (gamma < 0.0) throw InvalidParameter("dipole_from_decay: negative decay rate");
  if (!(wavelength > 0.0)) throw InvalidParameter("dipole_from_decay: wavelength must be > 0");
  // c^3/omega^3 = (lambda / 2 pi)^3
  const double reduced = wavelength / (2.0 * kPi);
  const double d = std::sqrt(3.0 * kPi * PC::epsilon0 * PC::hbar * gamma * reduced * reduced * reduced);
  return kind == TransitionKind::ElectricDipole ? d : PC::c * d;
}

LevelScheme build_five_level_scheme(const ModelParams& p) {
  validate(p);
  LevelScheme s;
  s.levels = {
      {1, 0.0, 0},
      {2, 0.0, 1},
      {3, 0.0, 1},
      {4, -p.two_photon_detuning, 0},
      {5, -p.raman_detuning, 0},
  };
  const double d34 = dipole_from_decay(p.gamma3, p.wavelength, TransitionKind::ElectricDipole);
  const double mu21 = dipole_from_decay(p.gamma2, p.wavelength, TransitionKind::MagneticDipole);
  // Drive transitions carry moment 0: their Rabi frequencies are given directly.
  s.transitions = {
      {1, 2, TransitionKind::MagneticDipole, mu21},
      {4, 3, TransitionKind::ElectricDipole, d34},
      {2, 3, TransitionKind::ElectricDipole, 0.0},
      {1, 5, TransitionKind::ElectricDipole, 0.0},
      {4, 5, TransitionKind::ElectricDipole, 0.0},
  };
  s.probe_magnetic = 0;
  s.probe_electric = 1;
  s.drives = {
      {2, 3, p.omega_c, 0.0},
      {1, 5, p.omega1, p.raman_detuning},
      {4, 5, p.omega2, p.raman_detuning - p.two_photon_detuning},
  };
  s.decays = {
      {3, 4, p.gamma3},
      {2, 1, p.gamma2},
      {5, 1, 0.5 * p.gamma5},
      {5, 4, 0.5 * p.gamma5},
      {4, 1, p.gamma4},
  };
  if (p.strict_lindblad) {
    // sqrt(2 gammaP)|2><2| damps every rho_2j at gammaP.
    s.decays.push_back({2, 2, 2.0 * p.gammaP});
  } else {
    for (const auto& [i, j] : p.dephasing_pairs) s.dephasings.push_back({i, j, p.gammaP});
  }
  s.reference_rate = p.gamma2;
  s.probe_detuning = p.probe_detuning;
  validate(s);
  return s;
}

LevelScheme build_three_level_scheme(double gamma2, double gamma3, double gammaP, cd omega_c,
                                     double probe_detuning, double wavelength) {
  LevelScheme s;
  s.levels = {{1, 0.0, 0}, {2, 0.0, 1}, {3, 0.0, 1}};
  s.transitions = {
      {1, 3, TransitionKind::ElectricDipole, dipole_from_decay(gamma3, wavelength, TransitionKind::ElectricDipole)},
      {1, 2, TransitionKind::MagneticDipole, dipole_from_decay(gamma2, wavelength, TransitionKind::MagneticDipole)},
      {2, 3, TransitionKind::ElectricDipole, 0.0},
  };
  s.probe_electric = 0;
  s.probe_magnetic = 1;
  s.drives = {{2, 3, omega_c, 0.0}};
  s.decays = {{3, 1, gamma3}, {2, 1, gamma2}};
  s.dephasings = {{1, 2, gammaP}};
  s.reference_rate = gamma2;
  s.probe_detuning = probe_detuning;
  validate(s);
  return s;
}

}  // namespace eic

#include "eic/response.hpp"

#include <cmath>
#include <complex>

#include "eic/constants.hpp"
#include "eic/error.hpp"

namespace eic {

namespace {

cd probe_coherence(const CMatrix& rho, const Transition& t) { return rho(t.upper - 1, t.lower - 1); }

// -i[H_X, .] for the probe coupling alone at the given complex amplitude.
CMatrix probe_superoperator(const LevelScheme& scheme, cd electric, cd magnetic) {
  LevelScheme bare = scheme;
  bare.drives.clear();
  for (auto& l : bare.levels) {
    l.frame_energy = 0.0;
    l.probe_photons = 0;
  }
  return commutator_superoperator(build_hamiltonian(bare, electric, magnetic, 0.0));
}

}  // namespace

LinearResponseDetail linear_response_detail(const LevelScheme& scheme, double detuning, double probe_phase) {
  validate(scheme);
  const Transition& te = scheme.electric_probe();
  const Transition& tm = scheme.magnetic_probe();
  const int n = scheme.dim();

  const Generator g0 = build_generator(scheme, 0.0, 0.0, detuning);
  const SteadyStateSolver solver(g0);
  LinearResponseDetail out{solver.steady_state(), {}, {}, {}};
  const CVector rho0 = out.rho0.vec();

  const cd unit = std::polar(1.0, probe_phase);
  auto first_order = [&](cd electric, cd magnetic) {
    const CVector rhs = -(probe_superoperator(scheme, electric, magnetic) * rho0);
    return DensityMatrix::from_vec(solver.solve(rhs, 0.0), n).entries;
  };
  out.rho1_electric = first_order(unit, 0.0);
  out.rho1_magnetic = first_order(0.0, unit);

  const cd unrotate = std::conj(unit);
  out.tensor.ee = probe_coherence(out.rho1_electric, te) * unrotate;
  out.tensor.he = probe_coherence(out.rho1_electric, tm) * unrotate;
  out.tensor.eh = probe_coherence(out.rho1_magnetic, te) * unrotate;
  out.tensor.hh = probe_coherence(out.rho1_magnetic, tm) * unrotate;
  out.tensor.detuning = detuning;
  return out;
}

ResponseTensor linear_response(const LevelScheme& scheme, double detuning) {
  return linear_response_detail(scheme, detuning).tensor;
}

double default_fd_rabi_scale(const LevelScheme& scheme) { return 1e-3 * scheme.reference_rate; }

ResponseTensor finite_difference_response(const LevelScheme& scheme, double detuning, double rabi_scale) {
  if (!std::isfinite(rabi_scale) || rabi_scale == 0.0)
    throw InvalidParameter("finite_difference_response: amplitude scale must be finite and nonzero");
  validate(scheme);
  const Transition& te = scheme.electric_probe();
  const Transition& tm = scheme.magnetic_probe();
  if (te.moment == 0.0 || tm.moment == 0.0)
    throw InvalidParameter("finite_difference_response: probe transition has zero moment");

  const double e_amp = rabi_scale * PhysicalConstants::hbar / te.moment;
  const double b_amp = rabi_scale * PhysicalConstants::hbar / tm.moment;

  auto rho_at = [&](double e, double b) {
    return steady_state(build_generator(scheme, e, b, detuning)).entries;
  };

  ResponseTensor t;
  t.detuning = detuning;
  {
    const CMatrix plus = rho_at(e_amp, 0.0);
    const CMatrix minus = rho_at(-e_amp, 0.0);
    t.ee = (probe_coherence(plus, te) - probe_coherence(minus, te)) / (2.0 * e_amp);
    t.he = (probe_coherence(plus, tm) - probe_coherence(minus, tm)) / (2.0 * e_amp);
  }
  {
    const CMatrix plus = rho_at(0.0, b_amp);
    const CMatrix minus = rho_at(0.0, -b_amp);
    t.eh = (probe_coherence(plus, te) - probe_coherence(minus, te)) / (2.0 * b_amp);
    t.hh = (probe_coherence(plus, tm) - probe_coherence(minus, tm)) / (2.0 * b_amp);
  }
  return t;
}

}  // namespace eic

#pragma once

#include <Eigen/Dense>
#include <span>

#include "eic/scheme.hpp"

namespace eic {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Column-stacked position of rho_ij (levels 1-based).
inline Eigen::Index vec_index(int i, int j, int dim) {
  return static_cast<Eigen::Index>(i - 1) + static_cast<Eigen::Index>(j - 1) * dim;
}

struct DensityMatrix {
  CMatrix entries;

  int dim() const noexcept { return static_cast<int>(entries.rows()); }
  /// Element rho_ij with 1-based level labels.
  cd operator()(int i, int j) const { return entries(i - 1, j - 1); }
  cd trace() const { return entries.trace(); }
  /// max |rho - rho^dagger|
  double hermiticity_error() const;
  CVector vec() const;
  static DensityMatrix from_vec(const CVector& v, int dim);
};

/// Superoperator acting on column-stacked density matrices (1/s).
struct Generator {
  int dim = 0;
  CMatrix matrix;
};

/// H/hbar in the rotating frame (rad/s). `electric` in V/m, `magnetic` in T.
CMatrix build_hamiltonian(const LevelScheme& scheme, cd electric, cd magnetic, double probe_detuning);

/// -i[H, .] as a dim^2 x dim^2 matrix.
CMatrix commutator_superoperator(const CMatrix& hamiltonian);

Generator build_generator(const CMatrix& hamiltonian, std::span<const DecayChannel> decays,
                          std::span<const DephasingEntry> dephasings);

Generator build_generator(const LevelScheme& scheme, cd electric, cd magnetic, double probe_detuning);

/// Factorizes G with one row replaced by the trace functional. Reused for the
/// steady state (trace 1) and for linearized solves (trace 0).
class SteadyStateSolver {
 public:
  /// Throws DegenerateSteadyState if G has more than one null direction.
  explicit SteadyStateSolver(const Generator& generator);

  DensityMatrix steady_state() const;

  /// Solves G x = rhs on every row but the replaced one, with tr(x) = trace.
  CVector solve(const CVector& rhs, cd trace) const;

  int replaced_row() const noexcept { return static_cast<int>(replaced_row_); }

 private:
  int dim_;
  Eigen::Index replaced_row_;
  double trace_scale_ = 1.0;
  Eigen::PartialPivLU<CMatrix> lu_;
};

DensityMatrix steady_state(const Generator& generator);

/// ||G vec(rho)|| / (||G|| ||vec(rho)||), Frobenius norms.
double relative_residual(const Generator& generator, const DensityMatrix& rho);

}  // namespace eic

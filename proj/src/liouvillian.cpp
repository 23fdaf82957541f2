#include "eic/liouvillian.hpp"

#include <algorithm>
#include <cmath>

#include "eic/constants.hpp"
#include "eic/error.hpp"

namespace eic {

namespace {

// Pivot ratio below which the trace-replaced system counts as singular.
constexpr double kRankThreshold = 1e-12;

void add_coupling(CMatrix& h, int lower, int upper, cd rabi) {
  h(upper - 1, lower - 1) += -0.5 * rabi;
  h(lower - 1, upper - 1) += -0.5 * std::conj(rabi);
}

}  // namespace

double DensityMatrix::hermiticity_error() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

CVector DensityMatrix::vec() const {
  return Eigen::Map<const CVector>(entries.data(), entries.size());
}

DensityMatrix DensityMatrix::from_vec(const CVector& v, int dim) {
  return DensityMatrix{Eigen::Map<const CMatrix>(v.data(), dim, dim)};
}

CMatrix build_hamiltonian(const LevelScheme& scheme, cd electric, cd magnetic, double probe_detuning) {
  const int n = scheme.dim();
  CMatrix h = CMatrix::Zero(n, n);
  for (const auto& l : scheme.levels)
    h(l.index - 1, l.index - 1) = l.frame_energy - l.probe_photons * probe_detuning;
  for (const auto& d : scheme.drives) add_coupling(h, d.lower, d.upper, d.rabi);
  if (scheme.probe_electric && electric != cd{}) {
    const auto& t = scheme.electric_probe();
    add_coupling(h, t.lower, t.upper, t.moment * electric / PhysicalConstants::hbar);
  }
  if (scheme.probe_magnetic && magnetic != cd{}) {
    const auto& t = scheme.magnetic_probe();
    add_coupling(h, t.lower, t.upper, t.moment * magnetic / PhysicalConstants::hbar);
  }
  return h;
}

CMatrix commutator_superoperator(const CMatrix& h) {
  const int n = static_cast<int>(h.rows());
  const cd i_unit{0.0, 1.0};
  CMatrix l = CMatrix::Zero(n * n, n * n);
  // (d rho/dt)_ij = -i sum_k (H_ik rho_kj - rho_ik H_kj)
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      const auto row = vec_index(i, j, n);
      for (int k = 1; k <= n; ++k) {
        l(row, vec_index(k, j, n)) += -i_unit * h(i - 1, k - 1);
        l(row, vec_index(i, k, n)) += i_unit * h(k - 1, j - 1);
      }
    }
  return l;
}

Generator build_generator(const CMatrix& hamiltonian, std::span<const DecayChannel> decays,
                          std::span<const DephasingEntry> dephasings) {
  const int n = static_cast<int>(hamiltonian.rows());
  if (hamiltonian.cols() != n) throw InvalidParameter("build_generator: Hamiltonian is not square");
  auto in_range = [n](int k) { return k >= 1 && k <= n; };

  Generator g{n, commutator_superoperator(hamiltonian)};
  for (const auto& d : decays) {
    if (!in_range(d.from) || !in_range(d.to))
      throw InvalidParameter("build_generator: decay channel outside Hamiltonian dimension");
    // gamma (L rho L^dag - {L^dag L, rho}/2), L = |to><from|
    g.matrix(vec_index(d.to, d.to, n), vec_index(d.from, d.from, n)) += d.rate;
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i) {
        const int hits = (i == d.from) + (j == d.from);
        if (hits) g.matrix(vec_index(i, j, n), vec_index(i, j, n)) -= 0.5 * d.rate * hits;
      }
  }
  for (const auto& p : dephasings) {
    if (!in_range(p.first) || !in_range(p.second) || p.first == p.second)
      throw InvalidParameter("build_generator: dephasing pair outside Hamiltonian dimension");
    g.matrix(vec_index(p.first, p.second, n), vec_index(p.first, p.second, n)) -= p.rate;
    g.matrix(vec_index(p.second, p.first, n), vec_index(p.second, p.first, n)) -= p.rate;
  }
  return g;
}

Generator build_generator(const LevelScheme& scheme, cd electric, cd magnetic, double probe_detuning) {
  return build_generator(build_hamiltonian(scheme, electric, magnetic, probe_detuning), scheme.decays,
                         scheme.dephasings);
}

SteadyStateSolver::SteadyStateSolver(const Generator& generator) : dim_(generator.dim), replaced_row_(0) {
  const auto unknowns = generator.matrix.rows();
  const double scale = std::max(generator.matrix.cwiseAbs().maxCoeff(), 1.0);

  CMatrix a = generator.matrix;
  a.row(replaced_row_).setZero();
  for (int k = 1; k <= dim_; ++k) a(replaced_row_, vec_index(k, k, dim_)) = scale;

  Eigen::FullPivLU<CMatrix> rank_check(a);
  rank_check.setThreshold(kRankThreshold);
  if (!rank_check.isInvertible()) {
    Eigen::FullPivLU<CMatrix> g_rank(generator.matrix);
    g_rank.setThreshold(kRankThreshold);
    throw DegenerateSteadyState(static_cast<int>(g_rank.rank()), static_cast<int>(unknowns));
  }
  lu_.compute(a);
  trace_scale_ = scale;
}

CVector SteadyStateSolver::solve(const CVector& rhs, cd trace) const {
  CVector b = rhs;
  b(replaced_row_) = trace * trace_scale_;
  return lu_.solve(b);
}

DensityMatrix SteadyStateSolver::steady_state() const {
  const CVector zero = CVector::Zero(static_cast<Eigen::Index>(dim_) * dim_);
  return DensityMatrix::from_vec(solve(zero, 1.0), dim_);
}

DensityMatrix steady_state(const Generator& generator) { return SteadyStateSolver(generator).steady_state(); }

double relative_residual(const Generator& generator, const DensityMatrix& rho) {
  const CVector v = rho.vec();
  return (generator.matrix * v).norm() / (generator.matrix.norm() * v.norm());
}

}  // namespace eic

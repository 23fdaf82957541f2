#include "eic/error.hpp"

#include <sstream>

namespace eic {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::ostringstream os;
  os << "validation failed (" << v.size() << " violation" << (v.size() == 1 ? "" : "s") << ")";
  for (const auto& s : v) os << "\n  - " << s;
  return os.str();
}

std::string rank_message(int rank, int unknowns) {
  std::ostringstream os;
  os << "degenerate steady state: generator rank " << rank << " of " << unknowns
     << " (expected " << unknowns - 1 << ")";
  return os.str();
}

std::string det_message(const std::string& what, std::complex<double> d) {
  std::ostringstream os;
  os << what << " (determinant " << d.real() << (d.imag() < 0 ? "" : "+") << d.imag() << "i)";
  return os.str();
}

std::string crossing_message(double lo, double hi) {
  std::ostringstream os;
  os << "Re n + 1 has no sign change in range (Re n at endpoints: " << lo << ", " << hi << ")";
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

DegenerateSteadyState::DegenerateSteadyState(int rank, int unknowns)
    : Error(rank_message(rank, unknowns)), rank_(rank), unknowns_(unknowns) {}

SingularSystem::SingularSystem(const std::string& what, std::complex<double> determinant)
    : Error(det_message(what, determinant)), determinant_(determinant) {}

NoCrossing::NoCrossing(double re_n_lo, double re_n_hi)
    : Error(crossing_message(re_n_lo, re_n_hi)), re_n_lo_(re_n_lo), re_n_hi_(re_n_hi) {}

}  // namespace eic

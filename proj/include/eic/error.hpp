#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace eic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A level scheme or parameter record failed validation; `violations` lists
/// every broken invariant, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// The generator has more than the one trace redundancy: the steady state
/// is not unique.
class DegenerateSteadyState : public Error {
 public:
  DegenerateSteadyState(int rank, int unknowns);
  int rank() const noexcept { return rank_; }
  int unknowns() const noexcept { return unknowns_; }

 private:
  int rank_;
  int unknowns_;
};

/// Local-field self-consistency matrix (or a closed-form denominator) vanished.
class SingularSystem : public Error {
 public:
  SingularSystem(const std::string& what, std::complex<double> determinant);
  std::complex<double> determinant() const noexcept { return determinant_; }

 private:
  std::complex<double> determinant_;
};

/// Re n + 1 never changes sign over the requested Omega_c range.
class NoCrossing : public Error {
 public:
  NoCrossing(double re_n_lo, double re_n_hi);
  double re_n_lo() const noexcept { return re_n_lo_; }
  double re_n_hi() const noexcept { return re_n_hi_; }

 private:
  double re_n_lo_;
  double re_n_hi_;
};

}  // namespace eic

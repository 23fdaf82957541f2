#pragma once

#include <string>
#include <vector>

#include "eic/scheme.hpp"

namespace eic {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
};

/// Internal consistency checks of the numerical core around `params`:
/// steady-state invariants, dark state, perturbative vs finite-difference
/// response, numerical vs closed-form three-level response, Omega_c phase
/// covariance and EIT suppression.
std::vector<CheckResult> run_self_checks(const ModelParams& params);

}  // namespace eic

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eic/constitutive.hpp"
#include "eic/scheme.hpp"

namespace eic {

inline constexpr std::string_view kToolName = "eicsim";
inline constexpr std::string_view kToolVersion = "0.3.0";

/// Sweep axis. Values are in input units: detuning and rabi_c_magnitude in
/// units of gamma2, density in cm^-3.
enum class SweepAxis { Detuning, Density, RabiCouplingMagnitude };

std::string_view axis_name(SweepAxis axis);
SweepAxis parse_axis(std::string_view name);

struct SweepSpec {
  ModelParams base;
  SweepAxis axis = SweepAxis::Detuning;
  std::vector<double> grid;
  std::vector<std::string> columns;  // empty: every column
  std::string label;                 // preset name, if any
  std::vector<std::string> notes;    // echoed into metadata
};

/// Throws ValidationError for an empty or non-monotone grid or bad params.
void validate(const SweepSpec& spec);

/// Result of the full pipeline at one parameter point.
struct PointResult {
  ResponseTensor tensor;
  MacroCoefficients macro;
  IndexResult index;
};

PointResult evaluate_point(const ModelParams& params);

/// Params at one grid value of `axis`. Rabi magnitude keeps the phase of base.omega_c.
ModelParams apply_axis(const ModelParams& base, SweepAxis axis, double value);

struct SweepRow {
  double axis = 0.0;
  cd n{};
  cd epsilon{};
  cd mu{};
  cd xi_eh{};
  cd xi_he{};
  double fom = 0.0;
  int branch_sign = 1;
  std::string error;  // empty when the point solved

  bool ok() const noexcept { return error.empty(); }
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
};

/// Evaluates grid points concurrently (OpenMP); rows stay in grid order.
SweepTable run_sweep(const SweepSpec& spec);

/// Single-threaded reference for run_sweep.
SweepTable run_sweep_serial(const SweepSpec& spec);

/// `lo:hi:npts[:log]`
std::vector<double> parse_grid(std::string_view text);
std::vector<double> make_grid(double lo, double hi, int points, bool logarithmic);

struct TuneResult {
  double omega_c = 0.0;  // |Omega_c| in units of gamma2
  IndexResult index;
  int iterations = 0;
};

/// Finds |Omega_c| in [lo, hi] (gamma2 units) with |Re n + 1| < tolerance by
/// scanning a log grid for the first sign change of Re n + 1 and bisecting.
/// Throws NoCrossing when no bracket converges.
TuneResult tune_to_minus_one(const ModelParams& base, double lo, double hi, double tolerance = 1e-3);

/// fig2a, fig2b, fig4, fig5.
SweepSpec preset(std::string_view name);
std::vector<std::string_view> preset_names();

}  // namespace eic

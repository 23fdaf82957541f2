#include "eic/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <sstream>

#include "eic/config.hpp"
#include "eic/constants.hpp"
#include "eic/error.hpp"
#include "eic/scheme.hpp"

namespace eic {

namespace {

const std::vector<std::string> kAllColumns = {
    "axis", "re_n", "im_n", "re_eps", "im_eps", "re_mu", "im_mu",
    "re_xi_eh", "im_xi_eh", "re_xi_he", "im_xi_he", "fom", "error"};

SweepRow make_row(const SweepSpec& spec, double value) {
  SweepRow row;
  row.axis = value;
  try {
    const auto r = evaluate_point(apply_axis(spec.base, spec.axis, value));
    row.n = r.index.n;
    row.epsilon = r.macro.epsilon;
    row.mu = r.macro.mu;
    row.xi_eh = r.macro.xi_eh;
    row.xi_he = r.macro.xi_he;
    row.fom = r.index.fom;
    row.branch_sign = r.index.branch_sign;
  } catch (const std::exception& e) {
    const double nan = std::nan("");
    row.n = row.epsilon = row.mu = row.xi_eh = row.xi_he = cd{nan, nan};
    row.fom = nan;
    row.error = e.what();
    // one line per cell
    std::replace(row.error.begin(), row.error.end(), '\n', ' ');
    std::replace(row.error.begin(), row.error.end(), ',', ';');
  }
  return row;
}

SweepTable empty_table(const SweepSpec& spec) {
  validate(spec);
  SweepTable t;
  t.columns = spec.columns.empty() ? kAllColumns : spec.columns;
  t.metadata.emplace_back("tool", std::string(kToolName) + " " + std::string(kToolVersion));
  if (!spec.label.empty()) t.metadata.emplace_back("preset", spec.label);
  t.metadata.emplace_back("axis", std::string(axis_name(spec.axis)));
  t.metadata.emplace_back("points", std::to_string(spec.grid.size()));
  for (auto& kv : describe_params(spec.base)) t.metadata.push_back(std::move(kv));
  for (const auto& note : spec.notes) t.metadata.emplace_back("note", note);
  t.rows.resize(spec.grid.size());
  return t;
}

void finish_metadata(SweepTable& t) {
  const auto flipped = std::count_if(t.rows.begin(), t.rows.end(), [](const SweepRow& r) { return r.branch_sign < 0; });
  const auto failed = std::count_if(t.rows.begin(), t.rows.end(), [](const SweepRow& r) { return !r.ok(); });
  t.metadata.emplace_back("branch_sign_negative_rows", std::to_string(flipped));
  t.metadata.emplace_back("failed_rows", std::to_string(failed));
}

double re_n_plus_one(const ModelParams& base, double omega_c) {
  return evaluate_point(apply_axis(base, SweepAxis::RabiCouplingMagnitude, omega_c)).index.n.real() + 1.0;
}

}  // namespace

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Detuning: return "detuning";
    case SweepAxis::Density: return "density";
    case SweepAxis::RabiCouplingMagnitude: return "rabi_c_magnitude";
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "detuning") return SweepAxis::Detuning;
  if (name == "density") return SweepAxis::Density;
  if (name == "rabi_c_magnitude") return SweepAxis::RabiCouplingMagnitude;
  throw InvalidParameter("unknown sweep axis '" + std::string(name) + "'");
}

void validate(const SweepSpec& spec) {
  std::vector<std::string> v;
  if (spec.grid.empty()) v.emplace_back("sweep grid is empty");
  for (double x : spec.grid)
    if (!std::isfinite(x)) v.emplace_back("sweep grid contains a non-finite value");
  if (spec.grid.size() > 1) {
    const bool up = spec.grid[1] > spec.grid[0];
    for (std::size_t k = 1; k < spec.grid.size(); ++k)
      if (up ? !(spec.grid[k] > spec.grid[k - 1]) : !(spec.grid[k] < spec.grid[k - 1])) {
        v.emplace_back("sweep grid is not strictly monotone");
        break;
      }
  }
  if (spec.axis == SweepAxis::Density)
    for (double x : spec.grid)
      if (!(x > 0.0)) {
        v.emplace_back("density grid values must be > 0");
        break;
      }
  for (const auto& c : spec.columns)
    if (std::find(kAllColumns.begin(), kAllColumns.end(), c) == kAllColumns.end())
      v.push_back("unknown output column '" + c + "'");
  if (!v.empty()) throw ValidationError(std::move(v));
  validate(spec.base);
}

ModelParams apply_axis(const ModelParams& base, SweepAxis axis, double value) {
  ModelParams p = base;
  switch (axis) {
    case SweepAxis::Detuning:
      p.probe_detuning = value * base.gamma2;
      break;
    case SweepAxis::Density:
      p.density = units::per_cm3_to_per_m3(value);
      break;
    case SweepAxis::RabiCouplingMagnitude: {
      const double phase = base.omega_c == cd{} ? 0.0 : std::arg(base.omega_c);
      p.omega_c = std::polar(value * base.gamma2, phase);
      break;
    }
  }
  return p;
}

PointResult evaluate_point(const ModelParams& params) {
  const LevelScheme scheme = build_five_level_scheme(params);
  PointResult r;
  r.tensor = linear_response(scheme, params.probe_detuning);
  r.macro = local_field_solve(
      {r.tensor, params.density, scheme.electric_probe().moment, scheme.magnetic_probe().moment});
  r.index = refractive_index(r.macro);
  return r;
}

SweepTable run_sweep(const SweepSpec& spec) {
  SweepTable t = empty_table(spec);
  const auto count = static_cast<long>(spec.grid.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < count; ++k) t.rows[static_cast<std::size_t>(k)] = make_row(spec, spec.grid[static_cast<std::size_t>(k)]);
  finish_metadata(t);
  return t;
}

SweepTable run_sweep_serial(const SweepSpec& spec) {
  SweepTable t = empty_table(spec);
  for (std::size_t k = 0; k < spec.grid.size(); ++k) t.rows[k] = make_row(spec, spec.grid[k]);
  finish_metadata(t);
  return t;
}

std::vector<double> make_grid(double lo, double hi, int points, bool logarithmic) {
  if (points < 1) throw InvalidParameter("grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidParameter("grid bounds must be finite");
  if (logarithmic && !(lo > 0.0 && hi > 0.0)) throw InvalidParameter("logarithmic grid bounds must be > 0");
  if (points > 1 && lo == hi) throw InvalidParameter("grid bounds must differ");
  std::vector<double> g(static_cast<std::size_t>(points));
  if (points == 1) {
    g[0] = lo;
    return g;
  }
  const double a = logarithmic ? std::log10(lo) : lo;
  const double b = logarithmic ? std::log10(hi) : hi;
  for (int k = 0; k < points; ++k) {
    const double x = a + (b - a) * k / (points - 1);
    g[static_cast<std::size_t>(k)] = logarithmic ? std::pow(10.0, x) : x;
  }
  // Pin the endpoints exactly.
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  const bool log = parts.size() == 4 && parts[3] == "log";
  if (!(parts.size() == 3 || log))
    throw InvalidParameter("grid must be lo:hi:npts[:log], got '" + std::string(text) + "'");
  auto number = [&](std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw InvalidParameter("bad number '" + std::string(s) + "' in grid");
    return x;
  };
  const double n = number(parts[2]);
  if (n != std::floor(n) || n < 1) throw InvalidParameter("grid point count must be a positive integer");
  return make_grid(number(parts[0]), number(parts[1]), static_cast<int>(n), log);
}

TuneResult tune_to_minus_one(const ModelParams& base, double lo, double hi, double tolerance) {
  if (!(lo > 0.0) || !(hi > lo)) throw InvalidParameter("tune_to_minus_one: need 0 < lo < hi");
  if (!(tolerance > 0.0)) throw InvalidParameter("tune_to_minus_one: tolerance must be > 0");
  validate(base);

  constexpr int kScanPoints = 64;
  constexpr int kMaxIterations = 200;
  const auto scan = make_grid(lo, hi, kScanPoints, true);
  std::vector<double> f(scan.size(), std::nan(""));
  for (std::size_t k = 0; k < scan.size(); ++k) {
    try {
      f[k] = re_n_plus_one(base, scan[k]);
    } catch (const Error&) {
      // NaN: no bracket through a failed point
    }
  }

  for (std::size_t k = 0; k + 1 < scan.size(); ++k) {
    if (!std::isfinite(f[k]) || !std::isfinite(f[k + 1])) continue;
    if (std::abs(f[k]) < tolerance) {
      const auto r = evaluate_point(apply_axis(base, SweepAxis::RabiCouplingMagnitude, scan[k]));
      return {scan[k], r.index, 0};
    }
    if ((f[k] < 0.0) == (f[k + 1] < 0.0)) continue;

    double a = scan[k], b = scan[k + 1], fa = f[k];
    for (int it = 1; it <= kMaxIterations; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = re_n_plus_one(base, mid);
      if (std::abs(fm) < tolerance) {
        const auto r = evaluate_point(apply_axis(base, SweepAxis::RabiCouplingMagnitude, mid));
        return {mid, r.index, it};
      }
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
      if (b - a <= 1e-14 * b) break;  // collapsed onto a jump, not a root
    }
  }
  throw NoCrossing(std::isfinite(f.front()) ? f.front() - 1.0 : f.front(),
                   std::isfinite(f.back()) ? f.back() - 1.0 : f.back());
}

std::vector<std::string_view> preset_names() { return {"fig2a", "fig2b", "fig4", "fig5"}; }

SweepSpec preset(std::string_view name) {
  SweepSpec s;
  s.label = std::string(name);
  if (name == "fig2a" || name == "fig2b") {
    s.axis = SweepAxis::Detuning;
    s.base.density = units::per_cm3_to_per_m3(name == "fig2a" ? 5e16 : 5e17);
    s.grid = make_grid(-100.0, 100.0, 401, false);
    s.notes.emplace_back("detuning range [-100, 100] gamma2 and 401-point grid chosen by this tool");
  } else if (name == "fig4") {
    s.axis = SweepAxis::Density;
    s.base.probe_detuning = -25.0 * s.base.gamma2;
    s.grid = make_grid(1e15, 1e18, 61, true);
    s.notes.emplace_back("61-point logarithmic density grid chosen by this tool");
  } else if (name == "fig5") {
    s.axis = SweepAxis::RabiCouplingMagnitude;
    s.base.density = units::per_cm3_to_per_m3(3.5e17);
    s.base.probe_detuning = -25.0 * s.base.gamma2;
    s.grid = make_grid(1e3, 1e5, 201, true);
    s.notes.emplace_back("201-point logarithmic |Omega_c| grid chosen by this tool");
  } else {
    throw InvalidParameter("unknown preset '" + std::string(name) + "' (fig2a, fig2b, fig4, fig5)");
  }
  return s;
}

}  // namespace eic

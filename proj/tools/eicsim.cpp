// eicsim: refractive-index spectra of the coherently driven five-level medium.
//
//   eicsim spectrum [--grid lo:hi:n] [options]      detuning sweep (gamma2 units)
//   eicsim density  [--grid lo:hi:n[:log]] [opts]   density sweep (cm^-3)
//   eicsim tune     [--range lo:hi] [options]       |Omega_c| giving Re n = -1
//   eicsim validate [options]                       numerical self-checks
//   eicsim preset   <fig2a|fig2b|fig4|fig5> [opts]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "eic/config.hpp"
#include "eic/constants.hpp"
#include "eic/error.hpp"
#include "eic/sweep.hpp"
#include "eic/table_io.hpp"
#include "eic/validation.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<double> density_cm3;
  std::optional<double> delta_gamma2;
  std::optional<double> omega_c;
  std::optional<double> omega_c_phase;
  std::string grid;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Flat JSON parameter file (input units)");
  cmd->add_option("--density-cm3", o.density_cm3, "Number density N in cm^-3");
  cmd->add_option("--delta-gamma2", o.delta_gamma2, "Probe detuning in units of gamma2");
  cmd->add_option("--omega-c", o.omega_c, "|Omega_c| in units of gamma2");
  cmd->add_option("--omega-c-phase", o.omega_c_phase, "Phase of Omega_c in radians");
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

eic::ModelParams resolve(const Overrides& o, eic::ModelParams base) {
  if (!o.config.empty()) base = eic::load_params_file(o.config, base);
  nlohmann::json flags = nlohmann::json::object();
  if (o.density_cm3) flags["density_cm3"] = *o.density_cm3;
  if (o.delta_gamma2) flags["delta"] = *o.delta_gamma2;
  if (o.omega_c) flags["omega_c"] = *o.omega_c;
  if (o.omega_c_phase) flags["omega_c_phase"] = *o.omega_c_phase;
  return eic::params_from_json(flags, base);
}

template <typename Write>
void emit(const Overrides& o, Write&& write) {
  if (o.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw eic::InvalidParameter("cannot open output file '" + o.out + "'");
  write(f);
}

void emit_table(const Overrides& o, const eic::SweepTable& table) {
  emit(o, [&](std::ostream& os) {
    if (o.format == "json") os << eic::to_json(table).dump(2) << '\n';
    else eic::write_csv(os, table);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refractive index of an electromagnetically induced chiral medium"};
  app.require_subcommand(1);

  Overrides spectrum_o, density_o, tune_o, validate_o, preset_o;

  auto* spectrum = app.add_subcommand("spectrum", "Sweep the probe detuning (gamma2 units)");
  add_common(spectrum, spectrum_o);
  spectrum->add_option("--grid", spectrum_o.grid, "lo:hi:npts[:log]")->default_str("-100:100:401");

  auto* density = app.add_subcommand("density", "Sweep the number density (cm^-3)");
  add_common(density, density_o);
  density->add_option("--grid", density_o.grid, "lo:hi:npts[:log]")->default_str("1e15:1e18:61:log");

  auto* tune = app.add_subcommand("tune", "Find |Omega_c| where Re n = -1");
  add_common(tune, tune_o);
  std::string range = "1e3:1e5";
  double tolerance = 1e-3;
  tune->add_option("--range", range, "|Omega_c| search range lo:hi in gamma2 units");
  tune->add_option("--tolerance", tolerance, "Target |Re n + 1|");

  auto* validate = app.add_subcommand("validate", "Run numerical self-checks");
  add_common(validate, validate_o);

  auto* preset = app.add_subcommand("preset", "Run a figure preset");
  add_common(preset, preset_o);
  preset->add_option("--grid", preset_o.grid, "Override the preset grid");
  std::string preset_name;
  preset->add_option("name", preset_name, "fig2a, fig2b, fig4 or fig5")
      ->required()
      ->check(CLI::IsMember({"fig2a", "fig2b", "fig4", "fig5"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed() || density->parsed()) {
      const bool is_spectrum = spectrum->parsed();
      const Overrides& o = is_spectrum ? spectrum_o : density_o;
      eic::SweepSpec spec;
      spec.axis = is_spectrum ? eic::SweepAxis::Detuning : eic::SweepAxis::Density;
      spec.base = resolve(o, {});
      spec.grid = eic::parse_grid(o.grid.empty() ? (is_spectrum ? "-100:100:401" : "1e15:1e18:61:log") : o.grid);
      emit_table(o, eic::run_sweep(spec));
    } else if (preset->parsed()) {
      eic::SweepSpec spec = eic::preset(preset_name);
      spec.base = resolve(preset_o, spec.base);
      if (!preset_o.grid.empty()) spec.grid = eic::parse_grid(preset_o.grid);
      emit_table(preset_o, eic::run_sweep(spec));
    } else if (tune->parsed()) {
      const auto params = resolve(tune_o, {});
      const auto colon = range.find(':');
      if (colon == std::string::npos) throw eic::InvalidParameter("--range must be lo:hi");
      const double lo = std::stod(range.substr(0, colon));
      const double hi = std::stod(range.substr(colon + 1));
      const auto r = eic::tune_to_minus_one(params, lo, hi, tolerance);
      emit(tune_o, [&](std::ostream& os) {
        if (tune_o.format == "json") {
          nlohmann::json j{{"omega_c_gamma2", r.omega_c},
                           {"re_n", r.index.n.real()},
                           {"im_n", r.index.n.imag()},
                           {"fom", r.index.fom},
                           {"iterations", r.iterations},
                           {"params", eic::params_to_json(params)}};
          os << j.dump(2) << '\n';
        } else {
          os << "omega_c_gamma2,re_n,im_n,fom,iterations\n"
             << eic::format_number(r.omega_c) << ',' << eic::format_number(r.index.n.real()) << ','
             << eic::format_number(r.index.n.imag()) << ',' << eic::format_number(r.index.fom) << ','
             << r.iterations << '\n';
        }
      });
    } else if (validate->parsed()) {
      const auto checks = eic::run_self_checks(resolve(validate_o, {}));
      bool all = true;
      emit(validate_o, [&](std::ostream& os) {
        for (const auto& c : checks) {
          all = all && c.passed;
          os << (c.passed ? "PASS " : "FAIL ") << c.name << "  (measured " << eic::format_number(c.measured)
             << ", limit " << eic::format_number(c.threshold) << ")\n";
        }
      });
      return all ? 0 : 1;
    }
  } catch (const eic::Error& e) {
    std::cerr << "eicsim: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "eicsim: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

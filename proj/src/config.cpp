#include "eic/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "eic/constants.hpp"
#include "eic/error.hpp"
#include "eic/table_io.hpp"

namespace eic {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {
    "gamma2_per_s", "gamma3", "gamma4", "gamma5", "gamma_p",
    "omega1", "omega1_phase", "omega2", "omega2_phase", "omega_c", "omega_c_phase",
    "density_cm3", "wavelength_nm", "delta", "raman_detuning", "two_photon_detuning",
    "dephasing_pairs", "strict_lindblad"};

double number(const json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_number()) throw InvalidParameter("config key '" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InvalidParameter("config key '" + key + "' is not finite");
  return x;
}

}  // namespace

json params_to_json(const ModelParams& p) {
  const double g = p.gamma2;
  json pairs = json::array();
  for (const auto& [i, j] : p.dephasing_pairs) pairs.push_back({i, j});
  return json{
      {"gamma2_per_s", g},
      {"gamma3", p.gamma3 / g},
      {"gamma4", p.gamma4 / g},
      {"gamma5", p.gamma5 / g},
      {"gamma_p", p.gammaP / g},
      {"omega1", std::abs(p.omega1) / g},
      {"omega1_phase", std::arg(p.omega1)},
      {"omega2", std::abs(p.omega2) / g},
      {"omega2_phase", std::arg(p.omega2)},
      {"omega_c", std::abs(p.omega_c) / g},
      {"omega_c_phase", std::arg(p.omega_c)},
      {"density_cm3", units::per_m3_to_per_cm3(p.density)},
      {"wavelength_nm", units::m_to_nm(p.wavelength)},
      {"delta", p.probe_detuning / g},
      {"raman_detuning", p.raman_detuning / g},
      {"two_photon_detuning", p.two_photon_detuning / g},
      {"dephasing_pairs", pairs},
      {"strict_lindblad", p.strict_lindblad},
  };
}

ModelParams params_from_json(const json& doc, const ModelParams& base) {
  if (!doc.is_object()) throw InvalidParameter("config must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kKeys.count(key)) throw InvalidParameter("unknown config key '" + key + "'");

  ModelParams p = base;
  // Everything except gamma2 is relative to gamma2, so read it first.
  if (doc.contains("gamma2_per_s")) {
    const double g_new = number(doc, "gamma2_per_s");
    const double ratio = g_new / base.gamma2;
    p.gamma2 = g_new;
    p.gamma3 *= ratio;
    p.gamma4 *= ratio;
    p.gamma5 *= ratio;
    p.gammaP *= ratio;
    p.omega1 *= ratio;
    p.omega2 *= ratio;
    p.omega_c *= ratio;
    p.probe_detuning *= ratio;
    p.raman_detuning *= ratio;
    p.two_photon_detuning *= ratio;
  }
  const double g = p.gamma2;
  auto rate = [&](const char* key, double& out) {
    if (doc.contains(key)) out = number(doc, key) * g;
  };
  rate("gamma3", p.gamma3);
  rate("gamma4", p.gamma4);
  rate("gamma5", p.gamma5);
  rate("gamma_p", p.gammaP);
  rate("delta", p.probe_detuning);
  rate("raman_detuning", p.raman_detuning);
  rate("two_photon_detuning", p.two_photon_detuning);

  auto rabi = [&](const char* key, cd& out) {
    const std::string phase_key = std::string(key) + "_phase";
    const double mag = doc.contains(key) ? number(doc, key) * g : std::abs(out);
    const double phase = doc.contains(phase_key) ? number(doc, phase_key) : std::arg(out);
    out = std::polar(mag, phase);
  };
  rabi("omega1", p.omega1);
  rabi("omega2", p.omega2);
  rabi("omega_c", p.omega_c);

  if (doc.contains("density_cm3")) p.density = units::per_cm3_to_per_m3(number(doc, "density_cm3"));
  if (doc.contains("wavelength_nm")) p.wavelength = units::nm_to_m(number(doc, "wavelength_nm"));
  if (doc.contains("strict_lindblad")) {
    if (!doc["strict_lindblad"].is_boolean()) throw InvalidParameter("strict_lindblad must be a boolean");
    p.strict_lindblad = doc["strict_lindblad"].get<bool>();
  }
  if (doc.contains("dephasing_pairs")) {
    p.dephasing_pairs.clear();
    for (const auto& pair : doc["dephasing_pairs"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        throw InvalidParameter("dephasing_pairs entries must be [i, j] integer pairs");
      p.dephasing_pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  validate(p);
  return p;
}

ModelParams load_params_file(const std::string& path, const ModelParams& base) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidParameter("config file '" + path + "': " + e.what());
  }
  return params_from_json(doc, base);
}

std::vector<std::pair<std::string, std::string>> describe_params(const ModelParams& p) {
  std::vector<std::pair<std::string, std::string>> out;
  const json doc = params_to_json(p);
  for (const auto& [key, value] : doc.items()) {
    if (value.is_number()) out.emplace_back(key, format_number(value.get<double>(), 15));
    else out.emplace_back(key, value.dump());
  }
  return out;
}

}  // namespace eic

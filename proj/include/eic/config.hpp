#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "eic/scheme.hpp"

namespace eic {

/// Flat key/value view of ModelParams in input units: gamma2 in 1/s, every
/// other rate, Rabi magnitude and detuning in units of gamma2, phases in
/// radians, density in cm^-3, wavelength in nm.
nlohmann::json params_to_json(const ModelParams& params);

/// Overlays the keys present in `doc` onto `base`. Unknown keys and
/// non-numeric values raise InvalidParameter.
ModelParams params_from_json(const nlohmann::json& doc, const ModelParams& base = {});

ModelParams load_params_file(const std::string& path, const ModelParams& base = {});

/// Ordered (key, value) pairs for metadata echo. Numbers carry 15 significant
/// digits, enough to reproduce any decimal input exactly.
std::vector<std::pair<std::string, std::string>> describe_params(const ModelParams& params);

}  // namespace eic

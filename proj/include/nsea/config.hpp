#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nsea/dynamics.hpp"
#include "nsea/freq_response.hpp"
#include "nsea/linear_sea.hpp"
#include "nsea/nsee_geometry.hpp"

namespace nsea {

/// Fully validated experiment configuration. The defaults are the reference
/// actuator: J_act = 0.005 kg m^2, D_act = 0.1 N m s/rad, 4 springs of
/// 32 N/mm on radii 0.07 m / 0.04 m, with the standard sweep grids.
struct ExperimentConfig {
  ActuatorParams actuator{0.005, 0.1};
  NseeGeometry geometry{4, 32000.0, 0.07, 0.04};
  SimConfig sim{};
  std::vector<double> sweep_amplitudes = Table2Options::default_amplitudes();
  std::vector<double> sweep_frequencies = Table2Options::default_frequencies();
  int settle_periods_physical = 2;
  int settle_periods_df = 0;
  double table_theta_max = 1.5;
  int table_samples = 301;
  std::string output_dir = "out";
};

/// Loads and validates a JSON config. Missing keys fall back to defaults;
/// unknown keys are rejected (typo guard). Spring stiffness is accepted in
/// N/mm and converted to N/m here, once; everything downstream is SI base
/// units and radians.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Parses a config from an in-memory JSON string (same rules as load_config).
ExperimentConfig parse_config(const std::string& json_text);

/// Serializes back to the JSON schema accepted by load_config, including the
/// N/mm spring-stiffness convention.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace nsea

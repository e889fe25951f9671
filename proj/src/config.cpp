#include "nsea/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace nsea {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& section,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key))
      throw std::invalid_argument("config: unknown key \"" + key + "\" in " +
                                  section);
  }
}

double get_number(const json& obj, const std::string& section,
                  const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number())
    throw std::invalid_argument("config: " + section + "." + key +
                                " must be a number");
  return v.get<double>();
}

int get_integer(const json& obj, const std::string& section,
                const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw std::invalid_argument("config: " + section + "." + key +
                                " must be an integer");
  return v.get<int>();
}

ExperimentConfig from_json(const json& root) {
  if (!root.is_object())
    throw std::invalid_argument("config: top level must be a JSON object");
  reject_unknown_keys(root, "top level",
                      {"actuator", "nsee", "simulation", "sweep",
                       "inversion_table", "output_dir"});
  ExperimentConfig cfg;

  if (root.contains("actuator")) {
    const json& a = root.at("actuator");
    reject_unknown_keys(a, "actuator", {"J_act", "D_act"});
    cfg.actuator = ActuatorParams(
        get_number(a, "actuator", "J_act", cfg.actuator.inertia),
        get_number(a, "actuator", "D_act", cfg.actuator.damping));
  }

  if (root.contains("nsee")) {
    const json& g = root.at("nsee");
    reject_unknown_keys(g, "nsee", {"n", "k_s", "R", "r"});
    // k_s arrives in N/mm; converted to N/m exactly once, here.
    const double k_s_N_per_mm = get_number(
        g, "nsee", "k_s", cfg.geometry.spring_stiffness() / 1000.0);
    cfg.geometry = NseeGeometry(
        get_integer(g, "nsee", "n", cfg.geometry.spring_count()),
        k_s_N_per_mm * 1000.0,
        get_number(g, "nsee", "R", cfg.geometry.outer_radius()),
        get_number(g, "nsee", "r", cfg.geometry.inner_radius()));
  }

  if (root.contains("simulation")) {
    const json& s = root.at("simulation");
    reject_unknown_keys(s, "simulation",
                        {"dt", "periods", "theta0", "theta_dot0"});
    cfg.sim.dt = get_number(s, "simulation", "dt", cfg.sim.dt);
    if (cfg.sim.dt < 0.0)
      throw std::invalid_argument("config: simulation.dt must be >= 0");
    cfg.sim.periods = get_integer(s, "simulation", "periods", cfg.sim.periods);
    if (cfg.sim.periods < 2)
      throw std::invalid_argument("config: simulation.periods must be >= 2");
    cfg.sim.initial.theta =
        get_number(s, "simulation", "theta0", cfg.sim.initial.theta);
    cfg.sim.initial.theta_dot =
        get_number(s, "simulation", "theta_dot0", cfg.sim.initial.theta_dot);
  }

  if (root.contains("sweep")) {
    const json& s = root.at("sweep");
    reject_unknown_keys(s, "sweep",
                        {"amplitudes", "frequency_min", "frequency_max",
                         "frequency_step", "settle_periods_physical",
                         "settle_periods_df"});
    if (s.contains("amplitudes")) {
      const json& a = s.at("amplitudes");
      if (!a.is_array() || a.empty())
        throw std::invalid_argument(
            "config: sweep.amplitudes must be a nonempty array");
      cfg.sweep_amplitudes.clear();
      for (const auto& v : a) {
        if (!v.is_number() || !(v.get<double>() > 0.0))
          throw std::invalid_argument(
              "config: sweep.amplitudes entries must be positive numbers");
        cfg.sweep_amplitudes.push_back(v.get<double>());
      }
    }
    const double f_min = get_number(s, "sweep", "frequency_min", 1.0);
    const double f_max = get_number(s, "sweep", "frequency_max", 30.0);
    const double f_step = get_number(s, "sweep", "frequency_step", 1.0);
    if (!(f_min > 0.0) || !(f_step > 0.0) || f_max < f_min)
      throw std::invalid_argument(
          "config: sweep frequency grid needs 0 < frequency_min <= "
          "frequency_max and frequency_step > 0");
    cfg.sweep_frequencies.clear();
    for (double f = f_min; f <= f_max * (1.0 + 1e-12); f += f_step)
      cfg.sweep_frequencies.push_back(f);
    cfg.settle_periods_physical =
        get_integer(s, "sweep", "settle_periods_physical",
                    cfg.settle_periods_physical);
    cfg.settle_periods_df =
        get_integer(s, "sweep", "settle_periods_df", cfg.settle_periods_df);
    if (cfg.settle_periods_physical < 0 || cfg.settle_periods_df < 0)
      throw std::invalid_argument("config: settle periods must be >= 0");
  }

  if (root.contains("inversion_table")) {
    const json& t = root.at("inversion_table");
    reject_unknown_keys(t, "inversion_table", {"theta_max", "samples"});
    cfg.table_theta_max =
        get_number(t, "inversion_table", "theta_max", cfg.table_theta_max);
    cfg.table_samples =
        get_integer(t, "inversion_table", "samples", cfg.table_samples);
    if (!(cfg.table_theta_max > 0.0) || cfg.table_samples < 2)
      throw std::invalid_argument(
          "config: inversion_table needs theta_max > 0 and samples >= 2");
  }

  if (root.contains("output_dir")) {
    if (!root.at("output_dir").is_string())
      throw std::invalid_argument("config: output_dir must be a string");
    cfg.output_dir = root.at("output_dir").get<std::string>();
  }

  return cfg;
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("config: cannot open " + path.string());
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + path.string() + ": " + e.what());
  }
  return from_json(root);
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return from_json(root);
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json root;
  root["actuator"] = {{"J_act", cfg.actuator.inertia},
                      {"D_act", cfg.actuator.damping}};
  root["nsee"] = {{"n", cfg.geometry.spring_count()},
                  {"k_s", cfg.geometry.spring_stiffness() / 1000.0},
                  {"R", cfg.geometry.outer_radius()},
                  {"r", cfg.geometry.inner_radius()}};
  root["simulation"] = {{"dt", cfg.sim.dt},
                        {"periods", cfg.sim.periods},
                        {"theta0", cfg.sim.initial.theta},
                        {"theta_dot0", cfg.sim.initial.theta_dot}};
  root["sweep"] = {
      {"amplitudes", cfg.sweep_amplitudes},
      {"frequency_min", cfg.sweep_frequencies.front()},
      {"frequency_max", cfg.sweep_frequencies.back()},
      {"frequency_step",
       cfg.sweep_frequencies.size() > 1
           ? cfg.sweep_frequencies[1] - cfg.sweep_frequencies[0]
           : 1.0},
      {"settle_periods_physical", cfg.settle_periods_physical},
      {"settle_periods_df", cfg.settle_periods_df}};
  root["inversion_table"] = {{"theta_max", cfg.table_theta_max},
                             {"samples", cfg.table_samples}};
  root["output_dir"] = cfg.output_dir;
  return root.dump(2);
}

}  // namespace nsea

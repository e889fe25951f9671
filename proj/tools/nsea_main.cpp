#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsea/config.hpp"
#include "nsea/csv.hpp"
#include "nsea/describing_function.hpp"
#include "nsea/dynamics.hpp"
#include "nsea/freq_response.hpp"
#include "nsea/linear_sea.hpp"
#include "nsea/lpv.hpp"
#include "nsea/nsee_model.hpp"

namespace {

using namespace nsea;

std::string one_line(std::string msg) {
  std::replace(msg.begin(), msg.end(), '\n', ';');
  return msg;
}

std::filesystem::path ensure_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

std::vector<double> log_spaced(double lo, double hi, int points) {
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo * std::exp(step * i);
  return grid;
}

std::vector<double> lin_spaced(double lo, double hi, int points) {
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < points; ++i)
    grid[i] = lo + (hi - lo) * i / (points - 1);
  return grid;
}

SimModel parse_model(const std::string& name) {
  if (name == "physical") return SimModel::physical;
  if (name == "df") return SimModel::df;
  throw std::invalid_argument("model must be \"physical\" or \"df\"");
}

void write_time_series_csv(const std::filesystem::path& path,
                           const TimeSeries& ts) {
  auto out = open_csv(path.string());
  CsvWriter csv(out, {"t_s", "theta_rad", "theta_dot_rad_s", "tau_act_Nm",
                      "tau_hb_Nm"});
  for (std::size_t i = 0; i < ts.size(); ++i)
    csv.row({ts.t[i], ts.theta[i], ts.theta_dot[i], ts.tau_act[i],
             ts.tau_hb[i]});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Frequency-domain analysis toolkit for a nonlinear-stiffness series "
      "elastic actuator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int threads = 0;
  bool json_out = false;
  app.add_option("--config", config_path, "JSON experiment config file");
  app.add_option("--out", out_dir, "output directory (default from config)");
  app.add_option("--threads", threads, "worker threads for sweeps (0 = all)");
  app.add_flag("--json", json_out, "emit scalar results as JSON");

  // design
  auto* design = app.add_subcommand("design",
                                 "size a constant-stiffness series element "
                                 "from saturation frequency and peak torque");
  double design_sat_hz = 15.0, design_tau_max = 15.0;
  double design_inertia = -1.0, design_damping = -1.0;
  design->add_option("--saturation-hz", design_sat_hz,
                     "target saturation frequency (Hz)");
  design->add_option("--tau-max", design_tau_max, "peak torque (N m)");
  design->add_option("--inertia", design_inertia,
                     "override actuator inertia (kg m^2)");
  design->add_option("--damping", design_damping,
                     "override actuator damping (N m s/rad)");

  // nsee
  auto* nsee = app.add_subcommand(
      "nsee", "tabulate exact/rational torque laws and exact stiffness");
  double nsee_theta_max = 1.0;
  int nsee_points = 401;
  nsee->add_option("--theta-max", nsee_theta_max,
                   "half-width of the deflection grid (rad, < pi)");
  nsee->add_option("--points", nsee_points, "grid points across the range");

  // df
  auto* df_cmd = app.add_subcommand(
      "df", "compare the closed-form equivalent gain with its Fourier "
            "quadrature estimate over an amplitude grid");
  double df_amin = 0.0, df_amax = 0.0;
  int df_points = 40, df_quad = 4096;
  df_cmd->add_option("--amin", df_amin, "smallest amplitude (rad)");
  df_cmd->add_option("--amax", df_amax, "largest amplitude (rad)");
  df_cmd->add_option("--points", df_points, "log-spaced amplitude count");
  df_cmd->add_option("--quad", df_quad, "quadrature intervals (>= 256)");

  // invert
  auto* invert = app.add_subcommand(
      "invert", "map torque amplitudes to deflection amplitudes via the "
                "table-seeded Newton iteration");
  std::vector<double> invert_torques;
  invert->add_option("--torques", invert_torques,
                     "torque amplitudes (N m); default 1,3,...,15")
      ->delimiter(',');

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "time-domain run of the full nonlinear or quasi-linear "
                  "actuator under a sine torque command");
  std::string sim_model = "physical";
  double sim_amplitude = 15.0, sim_frequency = 2.0, sim_dt = -1.0;
  int sim_periods = 0;
  simulate->add_option("--model", sim_model, "physical | df");
  simulate->add_option("--amplitude", sim_amplitude, "torque amplitude (N m)");
  simulate->add_option("--frequency", sim_frequency, "drive frequency (Hz)");
  simulate->add_option("--periods", sim_periods, "periods to simulate (>= 2)");
  simulate->add_option("--dt", sim_dt, "explicit step (s, must be <= T/1000)");

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "RMS-gain grid over the configured amplitudes x frequencies");
  std::string sweep_model = "physical";
  int sweep_settle = -1;
  sweep_cmd->add_option("--model", sweep_model, "physical | df");
  sweep_cmd->add_option("--settle", sweep_settle,
                        "settle periods before the gain window "
                        "(default from config per model)");

  // table2
  auto* table2 = app.add_subcommand(
      "table2", "zero-crossing comparison between the physical and "
                "describing-function models");
  int t2_settle_phys = -1, t2_settle_df = -1;
  table2->add_option("--settle-physical", t2_settle_phys,
                     "settle periods for the physical sweep");
  table2->add_option("--settle-df", t2_settle_df,
                     "settle periods for the DF sweep");

  // lpv
  auto* lpv_cmd = app.add_subcommand(
      "lpv", "amplitude-scheduled plant: gain schedule and optional Bode grid");
  double lpv_gain = 1.0, lpv_amin = 0.01, lpv_amax = 1.0;
  int lpv_points = 50;
  bool lpv_bode = false;
  double lpv_fmin = 1.0, lpv_fmax = 60.0;
  int lpv_fpoints = 60;
  lpv_cmd->add_option("--gain", lpv_gain, "plant gain K (> 0)");
  lpv_cmd->add_option("--amin", lpv_amin, "schedule amplitude minimum (rad)");
  lpv_cmd->add_option("--amax", lpv_amax, "schedule amplitude maximum (rad)");
  lpv_cmd->add_option("--points", lpv_points, "schedule points");
  lpv_cmd->add_flag("--bode", lpv_bode, "also emit the (A x frequency) "
                                        "magnitude grid");
  lpv_cmd->add_option("--fmin", lpv_fmin, "Bode frequency minimum (Hz)");
  lpv_cmd->add_option("--fmax", lpv_fmax, "Bode frequency maximum (Hz)");
  lpv_cmd->add_option("--fpoints", lpv_fpoints, "Bode frequency points");

  // Let --config/--out/--threads/--json appear after the subcommand too.
  for (CLI::App* sub : {design, nsee, df_cmd, invert, simulate, sweep_cmd,
                        table2, lpv_cmd})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig cfg =
        config_path.empty() ? ExperimentConfig{} : load_config(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    const ActuatorParams& act = cfg.actuator;
    const NseeGeometry& geom = cfg.geometry;

    if (app.got_subcommand(design)) {
      const ActuatorParams act_used(
          design_inertia > 0.0 ? design_inertia : act.inertia,
          design_damping >= 0.0 ? design_damping : act.damping);
      const double omega_sat = 2.0 * std::numbers::pi * design_sat_hz;
      const LinearSeaSpec spec =
          design_stiffness(act_used, omega_sat, design_tau_max);
      const auto crossing = zero_db_crossing(act_used, spec.stiffness);
      nlohmann::json out = {
          {"k_sea_Nm_per_rad", spec.stiffness},
          {"theta_max_rad", spec.peak_deflection},
          {"saturation_frequency_hz", design_sat_hz},
          {"zero_db_crossing_hz",
           crossing ? nlohmann::json(*crossing / (2.0 * std::numbers::pi))
                    : nlohmann::json(nullptr)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(nsee)) {
      if (!(nsee_theta_max > 0.0) || !(nsee_theta_max < std::numbers::pi))
        throw std::invalid_argument("nsee: --theta-max must be in (0, pi)");
      if (nsee_points < 2)
        throw std::invalid_argument("nsee: --points must be >= 2");
      const auto dir = ensure_out_dir(cfg.output_dir);
      const auto path = dir / "nsee.csv";
      auto out = open_csv(path.string());
      CsvWriter csv(out, {"theta_rad", "torque_exact_Nm",
                          "torque_maclaurin_Nm", "stiffness_exact_Nm_per_rad"});
      for (const double th :
           lin_spaced(-nsee_theta_max, nsee_theta_max, nsee_points))
        csv.row({th, torque_exact(geom, th), torque_maclaurin(geom, th),
                 stiffness_exact(geom, th)});
      std::cout << "wrote " << path.string() << "\n";
      return 0;
    }

    if (app.got_subcommand(df_cmd)) {
      const double root_alpha = std::sqrt(geom.alpha());
      const double lo = df_amin > 0.0 ? df_amin : 0.01 * root_alpha;
      const double hi = df_amax > 0.0 ? df_amax : 10.0 * root_alpha;
      if (!(hi > lo) || df_points < 1)
        throw std::invalid_argument("df: need --amax > --amin and points >= 1");
      const auto dir = ensure_out_dir(cfg.output_dir);
      const auto path = dir / "df.csv";
      auto out = open_csv(path.string());
      CsvWriter csv(out, {"A_rad", "N_tau_closed", "N_tau_numeric", "rel_err"});
      for (const double a : log_spaced(lo, hi, df_points)) {
        const DescribingFunctionValue v = describing_function(geom, a);
        const double numeric = df_numeric(geom, a, df_quad).n_est;
        csv.row({v.amplitude, v.gain, numeric,
                 std::abs(v.gain - numeric) / std::abs(numeric)});
      }
      std::cout << "wrote " << path.string() << "\n";
      return 0;
    }

    if (app.got_subcommand(invert)) {
      if (invert_torques.empty())
        invert_torques = Table2Options::default_amplitudes();
      const TorqueSampleTable table =
          build_sample_table(geom, cfg.table_theta_max, cfg.table_samples);
      std::vector<InversionResult> results;
      results.reserve(invert_torques.size());
      for (const double tau : invert_torques)
        results.push_back(invert_torque_amplitude(geom, table, tau));
      if (json_out) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < results.size(); ++i)
          rows.push_back({{"A_tau_Nm", invert_torques[i]},
                          {"A_rad", results[i].amplitude},
                          {"N_tau_Nm_per_rad",
                           df_closed_form(geom, results[i].amplitude)},
                          {"iterations", results[i].iterations}});
        std::cout << rows.dump(2) << "\n";
      } else {
        CsvWriter csv(std::cout, {"A_tau_Nm", "A_rad", "N_tau_Nm_per_rad",
                                  "iterations"});
        for (std::size_t i = 0; i < results.size(); ++i)
          csv.row({invert_torques[i], results[i].amplitude,
                   df_closed_form(geom, results[i].amplitude),
                   static_cast<double>(results[i].iterations)});
      }
      return 0;
    }

    if (app.got_subcommand(simulate)) {
      SimConfig sim_cfg = cfg.sim;
      if (sim_periods > 0) sim_cfg.periods = sim_periods;
      if (sim_dt >= 0.0) sim_cfg.dt = sim_dt;
      const SineExcitation exc(sim_amplitude, sim_frequency);
      const TimeSeries ts = parse_model(sim_model) == SimModel::physical
                                ? simulate_physical(act, geom, exc, sim_cfg)
                                : simulate_df_linear(act, geom, exc, sim_cfg);
      const auto dir = ensure_out_dir(cfg.output_dir);
      const auto path = dir / "simulate.csv";
      write_time_series_csv(path, ts);
      std::cout << "wrote " << path.string() << " (" << ts.size()
                << " samples)\n";
      return 0;
    }

    if (app.got_subcommand(sweep_cmd)) {
      const SimModel model = parse_model(sweep_model);
      SweepOptions opt;
      opt.threads = threads;
      opt.settle_periods = sweep_settle >= 0 ? sweep_settle
                           : model == SimModel::physical
                               ? cfg.settle_periods_physical
                               : cfg.settle_periods_df;
      const FreqResponseGrid grid =
          sweep(act, geom, model, cfg.sweep_amplitudes, cfg.sweep_frequencies,
                cfg.sim, opt);
      const auto dir = ensure_out_dir(cfg.output_dir);
      const auto path = dir / "sweep.csv";
      auto out = open_csv(path.string());
      out << "amplitude_Nm,frequency_Hz,gain,gain_dB,model\n";
      char buf[128];
      for (const FreqResponsePoint& p : grid.cells) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%s\n",
                      p.amplitude, p.frequency, p.gain, p.gain_db,
                      sweep_model.c_str());
        out << buf;
      }
      std::cout << "wrote " << path.string() << " (" << grid.cells.size()
                << " cells)\n";
      return 0;
    }

    if (app.got_subcommand(table2)) {
      Table2Options opt;
      opt.amplitudes = cfg.sweep_amplitudes;
      opt.frequencies = cfg.sweep_frequencies;
      opt.settle_periods_physical = t2_settle_phys >= 0
                                        ? t2_settle_phys
                                        : cfg.settle_periods_physical;
      opt.settle_periods_df =
          t2_settle_df >= 0 ? t2_settle_df : cfg.settle_periods_df;
      opt.threads = threads;
      const auto rows = compare_zero_crossings(act, geom, cfg.sim, opt);

      const auto dir = ensure_out_dir(cfg.output_dir);
      const auto path = dir / "table2.csv";
      auto out = open_csv(path.string());
      CsvWriter csv(out, {"amplitude_Nm", "f_zc_physical_Hz", "f_zc_df_Hz",
                          "diff_Hz"});
      for (const auto& r : rows)
        csv.row({r.amplitude, r.f_zc_physical, r.f_zc_df, r.difference});

      if (json_out) {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& r : rows)
          jrows.push_back({{"amplitude_Nm", r.amplitude},
                           {"f_zc_physical_Hz", r.f_zc_physical},
                           {"f_zc_df_Hz", r.f_zc_df},
                           {"diff_Hz", r.difference}});
        std::cout << jrows.dump(2) << "\n";
      } else {
        std::printf("%14s %18s %12s %9s\n", "amplitude [Nm]",
                    "physical [Hz]", "DF [Hz]", "diff [Hz]");
        for (const auto& r : rows)
          std::printf("%14.0f %18.0f %12.0f %9.0f\n", r.amplitude,
                      r.f_zc_physical, r.f_zc_df, r.difference);
      }
      std::cout << "wrote " << path.string() << "\n";
      return 0;
    }

    if (app.got_subcommand(lpv_cmd)) {
      if (!(lpv_amax > lpv_amin) || !(lpv_amin > 0.0) || lpv_points < 1)
        throw std::invalid_argument(
            "lpv: need 0 < --amin < --amax and --points >= 1");
      const LpvPlant plant(act, geom, lpv_gain);
      const auto amplitudes = lin_spaced(lpv_amin, lpv_amax, lpv_points);
      const auto schedule = export_schedule(plant, amplitudes);
      const auto dir = ensure_out_dir(cfg.output_dir);
      const auto path = dir / "lpv_schedule.csv";
      auto out = open_csv(path.string());
      CsvWriter csv(out, {"A_rad", "N_tau_Nm_per_rad", "natural_freq_Hz",
                          "damping_ratio"});
      for (const auto& p : schedule)
        csv.row({p.amplitude, p.equivalent_gain, p.natural_freq_hz,
                 p.damping_ratio});
      std::cout << "wrote " << path.string() << "\n";

      if (lpv_bode) {
        const auto bode_path = dir / "lpv_bode.csv";
        auto bode_out = open_csv(bode_path.string());
        CsvWriter bode_csv(bode_out, {"A_rad", "frequency_Hz", "magnitude",
                                      "magnitude_dB"});
        for (const double a : amplitudes) {
          for (const double f : lin_spaced(lpv_fmin, lpv_fmax, lpv_fpoints)) {
            const double mag =
                std::abs(lpv_response(plant, 2.0 * std::numbers::pi * f, a));
            bode_csv.row({a, f, mag, 20.0 * std::log10(mag)});
          }
        }
        std::cout << "wrote " << bode_path.string() << "\n";
      }
      return 0;
    }

    throw std::logic_error("unhandled subcommand");
  } catch (const std::exception& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return 1;
  }
}

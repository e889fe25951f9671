#include "nsea/freq_response.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nsea/describing_function.hpp"

namespace nsea {

double rms_gain(const TimeSeries& ts, double period) {
  return rms_gain_window(ts, period, 1);
}

double rms_gain_window(const TimeSeries& ts, double period, int first_period) {
  if (ts.size() < 2 || !(ts.dt > 0.0))
    throw std::invalid_argument("rms_gain: empty or unsampled series");
  if (first_period < 1)
    throw std::invalid_argument("rms_gain: window must start at or after T");
  const double ratio = period / ts.dt;
  const auto steps_per_period = static_cast<std::size_t>(std::llround(ratio));
  if (steps_per_period < 1 ||
      std::abs(ratio - static_cast<double>(steps_per_period)) > 1e-6)
    throw std::invalid_argument("rms_gain: sample step does not divide T");
  const std::size_t i0 = steps_per_period * first_period;
  const std::size_t i1 = i0 + steps_per_period;
  if (i1 >= ts.size())
    throw std::runtime_error(
        "rms_gain: series too short for the requested window");

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = i0; i <= i1; ++i) {
    const double w = (i == i0 || i == i1) ? 0.5 : 1.0;
    num += w * ts.tau_hb[i] * ts.tau_hb[i];
    den += w * ts.tau_act[i] * ts.tau_act[i];
  }
  if (den == 0.0)
    throw std::invalid_argument(
        "rms_gain: commanded torque is identically zero over the window");
  return std::sqrt(num / den);
}

namespace {

FreqResponsePoint run_cell(const ActuatorParams& act, const NseeGeometry& geom,
                           SimModel model, double k_df, double amplitude,
                           double frequency, const SimConfig& cfg,
                           int settle_periods) {
  const SineExcitation exc(amplitude, frequency);
  SimConfig cell_cfg = cfg;
  cell_cfg.periods = settle_periods + 2;
  const TimeSeries ts =
      model == SimModel::physical
          ? simulate_physical(act, geom, exc, cell_cfg)
          : simulate_linear_spring(act, k_df, exc, cell_cfg);
  const double g = rms_gain_window(ts, exc.period(), settle_periods + 1);
  return FreqResponsePoint{amplitude, frequency, g, 20.0 * std::log10(g)};
}

FreqResponseGrid run_sweep(const ActuatorParams& act, const NseeGeometry& geom,
                           SimModel model, std::span<const double> amplitudes,
                           std::span<const double> frequencies,
                           const SimConfig& cfg, const SweepOptions& opt,
                           bool parallel) {
  if (amplitudes.empty() || frequencies.empty())
    throw std::invalid_argument("sweep: amplitude and frequency grids must be "
                                "nonempty");
  if (opt.settle_periods < 0)
    throw std::invalid_argument("sweep: settle_periods must be >= 0");

  // The DF gain depends only on the amplitude; invert each row once and
  // share the table.
  std::vector<double> k_df(amplitudes.size(), 0.0);
  if (model == SimModel::df) {
    const TorqueSampleTable table = build_sample_table(geom, 1.5, 301);
    for (std::size_t a = 0; a < amplitudes.size(); ++a) {
      try {
        k_df[a] = df_closed_form(
            geom, amplitude_from_torque(geom, table, amplitudes[a]));
      } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "sweep failed: row (amplitude=" << amplitudes[a]
            << " Nm): " << e.what();
        throw std::runtime_error(msg.str());
      }
    }
  }

  FreqResponseGrid grid;
  grid.amplitudes.assign(amplitudes.begin(), amplitudes.end());
  grid.frequencies.assign(frequencies.begin(), frequencies.end());
  const std::size_t n_cells = amplitudes.size() * frequencies.size();
  grid.cells.resize(n_cells);
  std::vector<std::string> errors(n_cells);

  const auto cell_body = [&](std::size_t idx) {
    const std::size_t a = idx / frequencies.size();
    const std::size_t f = idx % frequencies.size();
    try {
      grid.cells[idx] = run_cell(act, geom, model, k_df[a], amplitudes[a],
                                 frequencies[f], cfg, opt.settle_periods);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "cell (amplitude=" << amplitudes[a]
          << " Nm, frequency=" << frequencies[f] << " Hz): " << e.what();
      errors[idx] = msg.str();
    }
  };

  if (parallel) {
#ifdef _OPENMP
    const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long idx = 0; idx < static_cast<long long>(n_cells); ++idx)
      cell_body(static_cast<std::size_t>(idx));
#else
    for (std::size_t idx = 0; idx < n_cells; ++idx) cell_body(idx);
#endif
  } else {
    for (std::size_t idx = 0; idx < n_cells; ++idx) cell_body(idx);
  }

  std::string failure;
  for (const auto& e : errors) {
    if (e.empty()) continue;
    if (!failure.empty()) failure += "; ";
    failure += e;
  }
  if (!failure.empty()) throw std::runtime_error("sweep failed: " + failure);
  return grid;
}

}  // namespace

FreqResponseGrid sweep(const ActuatorParams& act, const NseeGeometry& geom,
                       SimModel model, std::span<const double> amplitudes,
                       std::span<const double> frequencies,
                       const SimConfig& cfg, const SweepOptions& opt) {
  return run_sweep(act, geom, model, amplitudes, frequencies, cfg, opt, true);
}

FreqResponseGrid sweep_serial(const ActuatorParams& act,
                              const NseeGeometry& geom, SimModel model,
                              std::span<const double> amplitudes,
                              std::span<const double> frequencies,
                              const SimConfig& cfg, const SweepOptions& opt) {
  return run_sweep(act, geom, model, amplitudes, frequencies, cfg, opt, false);
}

double zero_crossing_frequency(std::span<const FreqResponsePoint> row) {
  if (row.empty())
    throw std::invalid_argument("zero_crossing_frequency: empty row");
  for (std::size_t i = 1; i < row.size(); ++i)
    if (!(row[i].frequency > row[i - 1].frequency))
      throw std::invalid_argument(
          "zero_crossing_frequency: frequencies must be strictly increasing");
  std::size_t last = row.size();
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i].gain >= 1.0) last = i;
  if (last == row.size())
    throw std::runtime_error(
        "zero_crossing_frequency: gain below 0 dB at every grid frequency");
  if (last == row.size() - 1)
    throw std::runtime_error(
        "zero_crossing_frequency: gain still at/above 0 dB at the top of the "
        "grid (grid too short)");
  return row[last].frequency;
}

std::vector<double> zero_crossings(const FreqResponseGrid& grid) {
  std::vector<double> out;
  out.reserve(grid.amplitudes.size());
  for (std::size_t a = 0; a < grid.amplitudes.size(); ++a)
    out.push_back(zero_crossing_frequency(grid.row(a)));
  return out;
}

std::vector<double> Table2Options::default_amplitudes() {
  return {1.0, 3.0, 5.0, 7.0, 9.0, 11.0, 13.0, 15.0};
}

std::vector<double> Table2Options::default_frequencies() {
  std::vector<double> f(30);
  std::iota(f.begin(), f.end(), 1.0);
  return f;
}

std::vector<ZeroCrossingComparison> compare_zero_crossings(
    const ActuatorParams& act, const NseeGeometry& geom, const SimConfig& cfg,
    const Table2Options& opt) {
  SweepOptions phys_opt{opt.settle_periods_physical, opt.threads};
  SweepOptions df_opt{opt.settle_periods_df, opt.threads};
  const FreqResponseGrid phys = sweep(act, geom, SimModel::physical,
                                      opt.amplitudes, opt.frequencies, cfg,
                                      phys_opt);
  const FreqResponseGrid df = sweep(act, geom, SimModel::df, opt.amplitudes,
                                    opt.frequencies, cfg, df_opt);
  const std::vector<double> zc_phys = zero_crossings(phys);
  const std::vector<double> zc_df = zero_crossings(df);

  std::vector<ZeroCrossingComparison> rows;
  rows.reserve(opt.amplitudes.size());
  for (std::size_t a = 0; a < opt.amplitudes.size(); ++a)
    rows.push_back(ZeroCrossingComparison{opt.amplitudes[a], zc_phys[a],
                                          zc_df[a], zc_phys[a] - zc_df[a]});
  return rows;
}

}  // namespace nsea

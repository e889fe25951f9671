#pragma once

#include <span>
#include <string>
#include <vector>

#include "nsea/dynamics.hpp"

namespace nsea {

enum class SimModel { physical, df };

/// One sweep cell: RMS torque-transfer gain at a given drive point.
struct FreqResponsePoint {
  double amplitude;  // A_tau, N m
  double frequency;  // Hz
  double gain;       // G, dimensionless
  double gain_db;    // 20 log10(G)
};

/// Rectangular (amplitude x frequency) gain grid, row-major with rows keyed
/// by amplitude ascending and columns by frequency ascending.
struct FreqResponseGrid {
  std::vector<double> amplitudes;
  std::vector<double> frequencies;
  std::vector<FreqResponsePoint> cells;

  std::span<const FreqResponsePoint> row(std::size_t amplitude_index) const {
    return {cells.data() + amplitude_index * frequencies.size(),
            frequencies.size()};
  }
};

/// Sweep execution knobs. settle_periods extra periods are simulated and
/// discarded before the one-period RMS window (0 reproduces the plain
/// [T, 2T] window from rest). threads = 0 uses all available cores.
struct SweepOptions {
  int settle_periods = 0;
  int threads = 0;
};

/// RMS gain from commanded to output torque over the window [T, 2T]:
///   G = sqrt(int_T^2T tau_hb^2 dt) / sqrt(int_T^2T tau_act^2 dt),
/// trapezoid rule on the stored samples. The sample step must divide T and
/// the series must cover [0, 2T].
double rms_gain(const TimeSeries& ts, double period);

/// As rms_gain but windowed on [kT, (k+1)T] for k = first_period; used by
/// sweeps to discard settle periods.
double rms_gain_window(const TimeSeries& ts, double period, int first_period);

/// One simulation + rms_gain per grid cell, cells independent and
/// deterministic. A failed cell fails the whole sweep with its coordinates
/// in the message. OpenMP-parallel over cells.
FreqResponseGrid sweep(const ActuatorParams& act, const NseeGeometry& geom,
                       SimModel model, std::span<const double> amplitudes,
                       std::span<const double> frequencies,
                       const SimConfig& cfg, const SweepOptions& opt = {});

/// Single-threaded reference implementation of sweep; kept for testing the
/// parallel kernel (results must match bit for bit) and for benchmarking.
FreqResponseGrid sweep_serial(const ActuatorParams& act,
                              const NseeGeometry& geom, SimModel model,
                              std::span<const double> amplitudes,
                              std::span<const double> frequencies,
                              const SimConfig& cfg,
                              const SweepOptions& opt = {});

/// Largest grid frequency with G >= 1 such that G < 1 at every higher grid
/// frequency; reported at grid resolution. Errors when the row never rises
/// to 0 dB or is still at/above 0 dB at the top of the grid.
double zero_crossing_frequency(std::span<const FreqResponsePoint> row);

/// zero_crossing_frequency for every amplitude row of a grid.
std::vector<double> zero_crossings(const FreqResponseGrid& grid);

/// One line of the physical-vs-DF zero-crossing comparison.
struct ZeroCrossingComparison {
  double amplitude;        // N m
  double f_zc_physical;    // Hz
  double f_zc_df;          // Hz
  double difference;       // physical - df, Hz
};

/// Grids and windowing for the zero-crossing comparison. The physical model
/// needs a settled window (its resonant ring-down otherwise dominates the
/// RMS window at high frequency); the DF model is windowed from rest.
struct Table2Options {
  std::vector<double> amplitudes = default_amplitudes();
  std::vector<double> frequencies = default_frequencies();
  int settle_periods_physical = 2;
  int settle_periods_df = 0;
  int threads = 0;

  static std::vector<double> default_amplitudes();   // 1, 3, ..., 15 N m
  static std::vector<double> default_frequencies();  // 1, 2, ..., 30 Hz
};

/// Runs both model sweeps and extracts per-amplitude zero crossings.
/// Asserts nothing itself; the comparison rows carry the numbers.
std::vector<ZeroCrossingComparison> compare_zero_crossings(
    const ActuatorParams& act, const NseeGeometry& geom, const SimConfig& cfg,
    const Table2Options& opt = {});

}  // namespace nsea

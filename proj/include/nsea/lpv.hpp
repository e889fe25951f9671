#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nsea/linear_sea.hpp"
#include "nsea/nsee_geometry.hpp"

namespace nsea {

/// Amplitude-scheduled plant: the second-order torque transfer with the
/// spring replaced by K * N_tau(A), where the deflection amplitude A is the
/// scheduling parameter. K is a free positive scalar (default 1) left
/// configurable for transmission/torque-constant lumping.
struct LpvPlant {
  ActuatorParams actuator;
  NseeGeometry geometry;
  double plant_gain = 1.0;  // K

  LpvPlant(const ActuatorParams& act, const NseeGeometry& geom,
           double gain = 1.0)
      : actuator(act), geometry(geom), plant_gain(gain) {
    if (!(plant_gain > 0.0))
      throw std::invalid_argument("LpvPlant: plant gain must be > 0");
  }
};

/// K N_tau(A) / (J (jw)^2 + D (jw) + K N_tau(A)).
std::complex<double> lpv_response(const LpvPlant& plant, double omega,
                                  double amplitude);

/// Scheduled second-order characteristics consumed by gain-scheduled
/// controller design.
struct SchedulePoint {
  double amplitude;          // A, rad
  double equivalent_gain;    // N_tau(A), N m/rad
  double natural_freq_hz;    // sqrt(K N_tau / J) / 2 pi
  double damping_ratio;      // D / (2 sqrt(J K N_tau))
};

std::vector<SchedulePoint> export_schedule(const LpvPlant& plant,
                                           std::span<const double> amplitudes);

}  // namespace nsea

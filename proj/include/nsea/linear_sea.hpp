#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

namespace nsea {

/// Motor-side inertia and viscous damping as seen through the transmission.
struct ActuatorParams {
  double inertia;  // J_act, kg m^2
  double damping;  // D_act, N m s/rad

  ActuatorParams(double inertia_kgm2, double damping_Nms_per_rad)
      : inertia(inertia_kgm2), damping(damping_Nms_per_rad) {
    if (!(inertia > 0.0))
      throw std::invalid_argument("ActuatorParams: inertia must be > 0");
    if (!(damping >= 0.0))
      throw std::invalid_argument("ActuatorParams: damping must be >= 0");
  }
};

/// Result of the constant-stiffness design rule: series stiffness sized so
/// the torque-transfer gain starts to roll off at omega_sat, with the peak
/// torque reached at deflection theta_max.
struct LinearSeaSpec {
  double stiffness;    // k_sea, N m/rad
  double peak_torque;  // tau_max, N m
  double peak_deflection;  // theta_max = tau_max / k_sea, rad
  double saturation_frequency;  // omega_sat, rad/s
};

/// k_sea * theta.
double linear_torque(const LinearSeaSpec& spec, double theta);

/// Torque transfer k / (J (jw)^2 + D (jw) + k); unit gain at DC.
std::complex<double> sea_frequency_response(const ActuatorParams& act,
                                            double stiffness, double omega);

/// sqrt(k / J): frequency where the transfer gain begins to decrease.
double saturation_frequency(const ActuatorParams& act, double stiffness);

/// Sizes k_sea = omega_sat^2 J and theta_max = tau_max / k_sea.
LinearSeaSpec design_stiffness(const ActuatorParams& act, double omega_sat,
                               double peak_torque);

/// Frequency where |transfer| falls through 1, sqrt(2k/J - (D/J)^2).
/// Empty when D^2 >= 2 k J (gain never exceeds unity above DC).
std::optional<double> zero_db_crossing(const ActuatorParams& act,
                                       double stiffness);

}  // namespace nsea

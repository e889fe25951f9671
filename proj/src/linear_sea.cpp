#include "nsea/linear_sea.hpp"

#include <cmath>

namespace nsea {

double linear_torque(const LinearSeaSpec& spec, double theta) {
  return spec.stiffness * theta;
}

std::complex<double> sea_frequency_response(const ActuatorParams& act,
                                            double stiffness, double omega) {
  if (!(stiffness > 0.0))
    throw std::invalid_argument("sea_frequency_response: stiffness must be > 0");
  const std::complex<double> den(stiffness - act.inertia * omega * omega,
                                 act.damping * omega);
  return stiffness / den;
}

double saturation_frequency(const ActuatorParams& act, double stiffness) {
  if (!(stiffness > 0.0))
    throw std::invalid_argument("saturation_frequency: stiffness must be > 0");
  return std::sqrt(stiffness / act.inertia);
}

LinearSeaSpec design_stiffness(const ActuatorParams& act, double omega_sat,
                               double peak_torque) {
  if (!(omega_sat > 0.0))
    throw std::invalid_argument("design_stiffness: omega_sat must be > 0");
  if (!(peak_torque > 0.0))
    throw std::invalid_argument("design_stiffness: peak torque must be > 0");
  const double k = omega_sat * omega_sat * act.inertia;
  return LinearSeaSpec{k, peak_torque, peak_torque / k, omega_sat};
}

std::optional<double> zero_db_crossing(const ActuatorParams& act,
                                       double stiffness) {
  if (!(stiffness > 0.0))
    throw std::invalid_argument("zero_db_crossing: stiffness must be > 0");
  const double arg = 2.0 * stiffness / act.inertia -
                     (act.damping / act.inertia) * (act.damping / act.inertia);
  if (arg <= 0.0) return std::nullopt;
  return std::sqrt(arg);
}

}  // namespace nsea

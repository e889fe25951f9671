#include "nsea/lpv.hpp"

#include <cmath>
#include <numbers>

#include "nsea/describing_function.hpp"

namespace nsea {

std::complex<double> lpv_response(const LpvPlant& plant, double omega,
                                  double amplitude) {
  const double k = plant.plant_gain * df_closed_form(plant.geometry, amplitude);
  return sea_frequency_response(plant.actuator, k, omega);
}

std::vector<SchedulePoint> export_schedule(
    const LpvPlant& plant, std::span<const double> amplitudes) {
  std::vector<SchedulePoint> schedule;
  schedule.reserve(amplitudes.size());
  const double J = plant.actuator.inertia;
  const double D = plant.actuator.damping;
  for (const double a : amplitudes) {
    const double n_tau = df_closed_form(plant.geometry, a);
    const double k = plant.plant_gain * n_tau;
    schedule.push_back(SchedulePoint{
        a, n_tau, std::sqrt(k / J) / (2.0 * std::numbers::pi),
        D / (2.0 * std::sqrt(J * k))});
  }
  return schedule;
}

}  // namespace nsea

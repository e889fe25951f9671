#include "nsea/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nsea/describing_function.hpp"
#include "nsea/nsee_model.hpp"

namespace nsea {

StepPlan plan_steps(const SimConfig& cfg, const SineExcitation& exc) {
  if (!(cfg.dt >= 0.0))
    throw std::invalid_argument("SimConfig: dt must be >= 0 (0 = auto)");
  if (cfg.periods < 2)
    throw std::invalid_argument(
        "SimConfig: at least 2 periods are required (the gain window is the "
        "second period)");
  const double T = exc.period();
  const double cap = T / 1000.0;
  double requested = cfg.dt;
  if (requested == 0.0) {
    requested = std::min(1e-4, cap);
  } else if (requested > cap * (1.0 + 1e-12)) {
    throw std::invalid_argument("SimConfig: dt exceeds T/1000 for " +
                                std::to_string(exc.frequency) + " Hz");
  }
  const int steps_per_period =
      static_cast<int>(std::ceil(T / requested - 1e-9));
  return StepPlan{T / steps_per_period, steps_per_period,
                  cfg.periods * steps_per_period};
}

TimeSeries simulate_physical(const ActuatorParams& act,
                             const NseeGeometry& geom,
                             const SineExcitation& exc, const SimConfig& cfg) {
  return integrate_actuator(
      act, [&geom](double theta) { return torque_exact(geom, theta); }, exc,
      cfg);
}

TimeSeries simulate_df_linear(const ActuatorParams& act,
                              const NseeGeometry& geom,
                              const SineExcitation& exc, const SimConfig& cfg) {
  // Unforced runs need no quasi-linearization; the equivalent gain tends to
  // zero with the amplitude anyway.
  if (exc.amplitude == 0.0)
    return simulate_linear_spring(act, 0.0, exc, cfg);
  const TorqueSampleTable table = build_sample_table(geom, 1.5, 301);
  const double amp = amplitude_from_torque(geom, table, exc.amplitude);
  return simulate_linear_spring(act, df_closed_form(geom, amp), exc, cfg);
}

TimeSeries simulate_linear_spring(const ActuatorParams& act, double stiffness,
                                  const SineExcitation& exc,
                                  const SimConfig& cfg) {
  return integrate_actuator(
      act, [stiffness](double theta) { return stiffness * theta; }, exc, cfg);
}

}  // namespace nsea

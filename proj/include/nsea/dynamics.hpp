#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "nsea/linear_sea.hpp"
#include "nsea/nsee_geometry.hpp"

namespace nsea {

/// Relative deflection between the two bars and its rate.
struct DeflectionState {
  double theta = 0.0;      // rad
  double theta_dot = 0.0;  // rad/s
};

/// Time derivative of a DeflectionState.
struct DeflectionRate {
  double d_theta;      // rad/s
  double d_theta_dot;  // rad/s^2
};

/// Sinusoidal torque command tau_act = A sin(2 pi f t).
struct SineExcitation {
  double amplitude;  // A_tau, N m (0 allowed: unforced run)
  double frequency;  // f, Hz

  SineExcitation(double amplitude_Nm, double frequency_Hz)
      : amplitude(amplitude_Nm), frequency(frequency_Hz) {
    if (!(amplitude >= 0.0))
      throw std::invalid_argument("SineExcitation: amplitude must be >= 0");
    if (!(frequency > 0.0))
      throw std::invalid_argument("SineExcitation: frequency must be > 0");
  }

  double omega() const { return 2.0 * std::numbers::pi * frequency; }
  double period() const { return 1.0 / frequency; }
};

/// Fixed-step integration settings. dt = 0 selects the default step rule
/// min(1e-4 s, T/1000); an explicit dt above T/1000 is an error. Either way
/// the step is snapped down so a whole number of steps spans one excitation
/// period (the RMS window arithmetic relies on that).
struct SimConfig {
  double dt = 0.0;  // s; 0 = auto
  int periods = 2;  // total simulated periods, >= 2
  DeflectionState initial{};
};

/// Resolved step layout for one run.
struct StepPlan {
  double dt;
  int steps_per_period;
  int total_steps;
};

/// Validates the config against the excitation and snaps the step down to
/// T / ceil(T / requested). Throws if an explicit dt exceeds T/1000
/// (requested steps above the cap are an error, not a clamp).
StepPlan plan_steps(const SimConfig& cfg, const SineExcitation& exc);

/// Uniformly sampled trajectory from either simulation path.
struct TimeSeries {
  double dt = 0.0;
  std::vector<double> t;          // s
  std::vector<double> theta;      // rad
  std::vector<double> theta_dot;  // rad/s
  std::vector<double> tau_act;    // commanded torque, N m
  std::vector<double> tau_hb;     // elastic-element output torque, N m

  std::size_t size() const { return t.size(); }
};

/// Classical 4-stage Runge-Kutta update. `deriv(t, state)` returns the
/// state rate.
template <typename Deriv>
DeflectionState rk4_step(const DeflectionState& s, Deriv&& deriv, double t,
                         double dt) {
  const DeflectionRate k1 = deriv(t, s);
  const DeflectionState s2{s.theta + 0.5 * dt * k1.d_theta,
                           s.theta_dot + 0.5 * dt * k1.d_theta_dot};
  const DeflectionRate k2 = deriv(t + 0.5 * dt, s2);
  const DeflectionState s3{s.theta + 0.5 * dt * k2.d_theta,
                           s.theta_dot + 0.5 * dt * k2.d_theta_dot};
  const DeflectionRate k3 = deriv(t + 0.5 * dt, s3);
  const DeflectionState s4{s.theta + dt * k3.d_theta,
                           s.theta_dot + dt * k3.d_theta_dot};
  const DeflectionRate k4 = deriv(t + dt, s4);
  return DeflectionState{
      s.theta + dt / 6.0 * (k1.d_theta + 2.0 * k2.d_theta + 2.0 * k3.d_theta +
                            k4.d_theta),
      s.theta_dot + dt / 6.0 * (k1.d_theta_dot + 2.0 * k2.d_theta_dot +
                                2.0 * k3.d_theta_dot + k4.d_theta_dot)};
}

/// Integrates J theta'' + D theta' + torque_law(theta) = A sin(w t) with the
/// plan from plan_steps and records every sample. The torque_law callable is
/// also used to fill the tau_hb column. With guard_deflection set, any
/// |theta| >= pi along the trajectory raises std::runtime_error.
template <typename TorqueLaw>
TimeSeries integrate_actuator(const ActuatorParams& act, TorqueLaw&& torque_law,
                              const SineExcitation& exc, const SimConfig& cfg,
                              bool guard_deflection = true) {
  const StepPlan plan = plan_steps(cfg, exc);
  const double w = exc.omega();

  TimeSeries ts;
  ts.dt = plan.dt;
  ts.t.reserve(plan.total_steps + 1);
  ts.theta.reserve(plan.total_steps + 1);
  ts.theta_dot.reserve(plan.total_steps + 1);
  ts.tau_act.reserve(plan.total_steps + 1);
  ts.tau_hb.reserve(plan.total_steps + 1);

  const auto deriv = [&](double t, const DeflectionState& s) {
    return DeflectionRate{
        s.theta_dot,
        (exc.amplitude * std::sin(w * t) - act.damping * s.theta_dot -
         torque_law(s.theta)) /
            act.inertia};
  };

  DeflectionState state = cfg.initial;
  for (int i = 0; i <= plan.total_steps; ++i) {
    const double t = i * plan.dt;
    ts.t.push_back(t);
    ts.theta.push_back(state.theta);
    ts.theta_dot.push_back(state.theta_dot);
    ts.tau_act.push_back(exc.amplitude * std::sin(w * t));
    ts.tau_hb.push_back(torque_law(state.theta));
    if (i == plan.total_steps) break;
    try {
      state = rk4_step(state, deriv, t, plan.dt);
    } catch (const std::domain_error&) {
      // A stage evaluation of the torque law left the element's range.
      throw std::runtime_error(
          "simulation: |theta| reached pi near t = " + std::to_string(t) +
          " s (deflection out of the element's working range)");
    }
    if (guard_deflection && !(std::abs(state.theta) < std::numbers::pi))
      throw std::runtime_error(
          "simulation: |theta| reached pi at t = " + std::to_string(t) +
          " s (deflection out of the element's working range)");
  }
  return ts;
}

/// Full nonlinear run: the elastic element follows torque_exact.
TimeSeries simulate_physical(const ActuatorParams& act,
                             const NseeGeometry& geom,
                             const SineExcitation& exc, const SimConfig& cfg);

/// Quasi-linear run: the element is replaced by the constant gain
/// N_tau(A) with A inverted from the torque amplitude once per run.
TimeSeries simulate_df_linear(const ActuatorParams& act,
                              const NseeGeometry& geom,
                              const SineExcitation& exc, const SimConfig& cfg);

/// Linear-spring run with an explicit stiffness. Test hook for checking the
/// integrator against the closed-form transfer function, and the backend of
/// simulate_df_linear.
TimeSeries simulate_linear_spring(const ActuatorParams& act, double stiffness,
                                  const SineExcitation& exc,
                                  const SimConfig& cfg);

}  // namespace nsea

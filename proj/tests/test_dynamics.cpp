#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "nsea/describing_function.hpp"
#include "nsea/dynamics.hpp"
#include "nsea/freq_response.hpp"
#include "nsea/nsee_model.hpp"

using namespace nsea;

namespace {

NseeGeometry reference_geometry() { return NseeGeometry(4, 32000.0, 0.07, 0.04); }
ActuatorParams reference_actuator() { return ActuatorParams(0.005, 0.1); }

}  // namespace

TEST_CASE("rk4_step basics") {
  const auto zero_field = [](double, const DeflectionState&) {
    return DeflectionRate{0.0, 0.0};
  };
  const DeflectionState s0{0.4, -0.2};
  const DeflectionState s1 = rk4_step(s0, zero_field, 0.0, 0.01);
  CHECK(s1.theta == s0.theta);
  CHECK(s1.theta_dot == s0.theta_dot);

  const auto drift = [](double, const DeflectionState& s) {
    return DeflectionRate{s.theta_dot, 0.0};
  };
  const DeflectionState s2 = rk4_step(DeflectionState{1.0, 3.0}, drift, 0.0, 0.25);
  CHECK(s2.theta == doctest::Approx(1.0 + 3.0 * 0.25).epsilon(1e-15));
  CHECK(s2.theta_dot == 3.0);
}

TEST_CASE("rk4 energy drift on a harmonic oscillator over one period") {
  const double w = 2.0 * std::numbers::pi;
  const auto oscillator = [w](double, const DeflectionState& s) {
    return DeflectionRate{s.theta_dot, -w * w * s.theta};
  };
  DeflectionState s{1.0, 0.0};
  const double dt = 1e-3;  // T/1000 for the 1 Hz oscillator
  const double e0 = 0.5 * (s.theta_dot * s.theta_dot + w * w * s.theta * s.theta);
  for (int i = 0; i < 1000; ++i) s = rk4_step(s, oscillator, i * dt, dt);
  const double e1 = 0.5 * (s.theta_dot * s.theta_dot + w * w * s.theta * s.theta);
  CHECK(std::abs(e1 - e0) / e0 < 1e-8);
}

TEST_CASE("plan_steps snaps the step to divide the period") {
  SUBCASE("auto step at high frequency uses T/1000") {
    const StepPlan p = plan_steps(SimConfig{}, SineExcitation(1.0, 30.0));
    CHECK(p.steps_per_period == 1000);
    CHECK(p.dt == doctest::Approx((1.0 / 30.0) / 1000.0).epsilon(1e-15));
  }
  SUBCASE("auto step at low frequency keeps dt <= 1e-4") {
    const StepPlan p = plan_steps(SimConfig{}, SineExcitation(1.0, 3.0));
    CHECK(p.steps_per_period == 3334);
    CHECK(p.dt <= 1e-4 * (1.0 + 1e-12));
    CHECK(p.steps_per_period * p.dt ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("explicit step above T/1000 is an error") {
    SimConfig cfg;
    cfg.dt = (1.0 / 5.0) / 500.0;
    CHECK_THROWS_AS(plan_steps(cfg, SineExcitation(1.0, 5.0)),
                    std::invalid_argument);
  }
  SUBCASE("fewer than two periods is an error") {
    SimConfig cfg;
    cfg.periods = 1;
    CHECK_THROWS_AS(plan_steps(cfg, SineExcitation(1.0, 5.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("unforced runs stay at the equilibrium exactly") {
  const auto act = reference_actuator();
  const auto geom = reference_geometry();
  const SineExcitation unforced(0.0, 2.0);
  for (const TimeSeries& ts :
       {simulate_physical(act, geom, unforced, SimConfig{}),
        simulate_df_linear(act, geom, unforced, SimConfig{})}) {
    CHECK(ts.size() == 2 * 5000 + 1);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(ts.theta[i] == 0.0);
      CHECK(ts.theta_dot[i] == 0.0);
      CHECK(ts.tau_hb[i] == 0.0);
    }
  }
}

TEST_CASE("physical run length and determinism") {
  const auto act = reference_actuator();
  const auto geom = reference_geometry();
  SimConfig cfg;
  cfg.periods = 3;
  const SineExcitation exc(15.0, 2.0);
  const TimeSeries a = simulate_physical(act, geom, exc, cfg);
  const TimeSeries b = simulate_physical(act, geom, exc, cfg);
  CHECK(a.size() == 3 * 5000 + 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.theta[i] == b.theta[i]);
    CHECK(a.theta_dot[i] == b.theta_dot[i]);
    CHECK(a.tau_hb[i] == b.tau_hb[i]);
  }
}

TEST_CASE("linear-spring hook reproduces the closed-form transfer at low "
          "frequency") {
  const auto act = reference_actuator();
  const double k = 44.41322;
  const SineExcitation exc(1.0, 1.0);
  const TimeSeries ts = simulate_linear_spring(act, k, exc, SimConfig{});
  const double g = rms_gain(ts, exc.period());
  const double analytic = std::abs(sea_frequency_response(act, k, exc.omega()));
  CHECK(g == doctest::Approx(analytic).epsilon(0.01));
  CHECK(g == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("output cannot keep up with a small drive at 12 Hz") {
  const auto act = reference_actuator();
  const auto geom = reference_geometry();
  const SineExcitation exc(1.0, 12.0);
  const TimeSeries ts = simulate_physical(act, geom, exc, SimConfig{});
  CHECK(rms_gain(ts, exc.period()) < 1.0);
}

TEST_CASE("quasi-linear run settles onto the analytic LTI response") {
  const auto act = reference_actuator();
  const auto geom = reference_geometry();
  const SineExcitation exc(15.0, 5.0);
  SimConfig cfg;
  cfg.periods = 42;
  const TimeSeries ts = simulate_df_linear(act, geom, exc, cfg);

  const TorqueSampleTable table = build_sample_table(geom, 1.5, 301);
  const double k =
      df_closed_form(geom, amplitude_from_torque(geom, table, exc.amplitude));
  const double expected =
      std::abs(sea_frequency_response(act, k, exc.omega())) * exc.amplitude;

  double peak = 0.0;
  const std::size_t last_period_start = ts.size() - 1 - 2000;
  for (std::size_t i = last_period_start; i < ts.size(); ++i)
    peak = std::max(peak, std::abs(ts.tau_hb[i]));
  CHECK(peak == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("larger torque amplitude schedules a stiffer equivalent spring") {
  const auto geom = reference_geometry();
  const TorqueSampleTable table = build_sample_table(geom, 1.5, 301);
  const double k1 =
      df_closed_form(geom, amplitude_from_torque(geom, table, 1.0));
  const double k15 =
      df_closed_form(geom, amplitude_from_torque(geom, table, 15.0));
  CHECK(k15 > k1);
}

TEST_CASE("unforced decay dissipates energy monotonically") {
  const auto act = reference_actuator();
  const auto geom = reference_geometry();
  SimConfig cfg;
  cfg.initial = DeflectionState{0.5, 0.0};
  const TimeSeries ts =
      simulate_physical(act, geom, SineExcitation(0.0, 2.0), cfg);
  double prev = 0.5 * act.inertia * ts.theta_dot[0] * ts.theta_dot[0] +
                potential_energy(geom, ts.theta[0]);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double e = 0.5 * act.inertia * ts.theta_dot[i] * ts.theta_dot[i] +
                     potential_energy(geom, ts.theta[i]);
    CHECK(e <= prev * (1.0 + 1e-12) + 1e-12);
    prev = e;
  }
}

TEST_CASE("linear path scales exactly with the drive amplitude") {
  const auto act = reference_actuator();
  const double k = 36.6;
  SimConfig cfg;
  const TimeSeries one = simulate_linear_spring(act, k, SineExcitation(1.0, 4.0), cfg);
  const TimeSeries two = simulate_linear_spring(act, k, SineExcitation(2.0, 4.0), cfg);
  REQUIRE(one.size() == two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(two.theta[i] == 2.0 * one.theta[i]);
    CHECK(two.tau_hb[i] == 2.0 * one.tau_hb[i]);
  }
}

TEST_CASE("halving the step leaves the trajectory unchanged to 1e-6 rad") {
  const auto act = reference_actuator();
  const auto geom = reference_geometry();
  const SineExcitation exc(15.0, 22.0);

  SimConfig coarse;  // auto: T/1000
  const TimeSeries a = simulate_physical(act, geom, exc, coarse);
  SimConfig fine;
  fine.dt = exc.period() / 2000.0;
  const TimeSeries b = simulate_physical(act, geom, exc, fine);
  REQUIRE(b.size() == 2 * (a.size() - 1) + 1);

  double sum_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.theta[i] - b.theta[2 * i];
    sum_sq += d * d;
  }
  CHECK(std::sqrt(sum_sq / a.size()) < 1e-6);
}

TEST_CASE("runaway deflection raises a range error") {
  const auto act = reference_actuator();
  const auto geom = reference_geometry();
  CHECK_THROWS_AS(
      simulate_physical(act, geom, SineExcitation(500.0, 2.0), SimConfig{}),
      std::runtime_error);
}

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "nsea/describing_function.hpp"
#include "nsea/nsee_model.hpp"

using namespace nsea;

namespace {

NseeGeometry reference_geometry() { return NseeGeometry(4, 32000.0, 0.07, 0.04); }

std::vector<double> log_amplitude_grid(const NseeGeometry& g, int points) {
  const double lo = 0.01 * std::sqrt(g.alpha());
  const double hi = 10.0 * std::sqrt(g.alpha());
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = lo * std::exp(std::log(hi / lo) * i / (points - 1));
  return grid;
}

// Bisection on the rational torque law, independent of the Newton path.
double bisect_amplitude(const NseeGeometry& g, double target) {
  double lo = 0.0;
  double hi = 1.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (torque_maclaurin(g, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("closed form agrees with the Fourier quadrature route") {
  const NseeGeometry g = reference_geometry();
  for (const double a : log_amplitude_grid(g, 20)) {
    const FourierFundamental f = df_numeric(g, a, 4096);
    const double closed = df_closed_form(g, a);
    CHECK(std::abs(closed - f.n_est) / f.n_est < 1e-7);
    CHECK(std::abs(f.a1) < 1e-10 * std::abs(f.b1));
    CHECK(f.b1 > 0.0);
  }
  CHECK(df_numeric(g, 0.5, 4096).n_est ==
        doctest::Approx(df_closed_form(g, 0.5)).epsilon(1e-8));
  CHECK(df_numeric(g, 0.314, 4096).n_est ==
        doctest::Approx(df_closed_form(g, 0.314)).epsilon(1e-6));
}

TEST_CASE("quadrature self-convergence") {
  const NseeGeometry g = reference_geometry();
  const double coarse = df_numeric(g, 0.4, 2048).n_est;
  const double fine = df_numeric(g, 0.4, 4096).n_est;
  CHECK(std::abs(coarse - fine) / fine < 1e-10);
  CHECK_THROWS_AS(df_numeric(g, 0.4, 255), std::invalid_argument);
}

TEST_CASE("equivalent gain: bounds, monotonicity, limits") {
  const NseeGeometry g = reference_geometry();
  const double nkb = g.asymptotic_stiffness();

  double prev = 0.0;
  for (const double a : log_amplitude_grid(g, 200)) {
    const double n = df_closed_form(g, a);
    CHECK(n > 0.0);
    CHECK(n < nkb);
    CHECK(n > prev);
    prev = n;
  }

  // Cubic-nonlinearity limit for small amplitudes.
  CHECK(df_closed_form(g, 0.01) == doctest::Approx(0.0418).epsilon(1e-3));
  for (const double a : {0.01, 0.02, 0.05}) {
    const double ratio = df_closed_form(g, a) * 4.0 * g.alpha() /
                         (3.0 * nkb * a * a);
    CHECK(ratio >= 0.99);
    CHECK(ratio <= 1.0);
  }

  // Saturation toward the asymptotic slope.
  CHECK(df_closed_form(g, 1000.0) == doctest::Approx(nkb).epsilon(1e-5));

  const DescribingFunctionValue v = describing_function(g, 0.314);
  CHECK(v.amplitude == 0.314);
  CHECK(v.gain == df_closed_form(g, 0.314));

  CHECK_THROWS_AS(df_closed_form(g, 0.0), std::domain_error);
  CHECK_THROWS_AS(df_closed_form(g, -0.1), std::domain_error);
}

TEST_CASE("series branch joins the closed form continuously") {
  const NseeGeometry g = reference_geometry();
  const double a_switch = std::sqrt(1e-8 * g.alpha());
  const double below = df_closed_form(g, a_switch * 0.999);
  const double above = df_closed_form(g, a_switch * 1.001);
  CHECK(below < above);
  CHECK(std::abs(above - below) / above < 0.01);
}

TEST_CASE("build_sample_table") {
  const NseeGeometry g = reference_geometry();
  const TorqueSampleTable t = build_sample_table(g, 1.0, 101);
  CHECK(t.theta().size() == 101);
  CHECK(t.theta().front() == 0.0);
  CHECK(t.torque().front() == 0.0);
  CHECK(t.theta().back() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.torque().back() ==
        doctest::Approx(g.asymptotic_stiffness() / (g.alpha() + 1.0))
            .epsilon(1e-14));
  CHECK(t.torque().back() == doctest::Approx(218.2).epsilon(1e-3));
  for (std::size_t i = 1; i < t.torque().size(); ++i)
    CHECK(t.torque()[i] > t.torque()[i - 1]);

  const TorqueSampleTable degenerate = build_sample_table(g, 1.0, 2);
  CHECK(degenerate.theta().size() == 2);
  CHECK_THROWS_AS(build_sample_table(g, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_sample_table(g, -1.0, 10), std::invalid_argument);
}

TEST_CASE("Newton inversion against the bisection oracle") {
  const NseeGeometry g = reference_geometry();
  const TorqueSampleTable table = build_sample_table(g, 1.5, 301);

  for (double target = 1.0; target <= 15.0; target += 2.0) {
    const InversionResult res = invert_torque_amplitude(g, table, target);
    CHECK(std::abs(res.amplitude - bisect_amplitude(g, target)) < 1e-9);
    CHECK(res.iterations <= 10);
    CHECK(std::abs(torque_maclaurin(g, res.amplitude) - target) <
          1e-9 * std::max(1.0, target));
  }
  CHECK(amplitude_from_torque(g, table, 15.0) ==
        doctest::Approx(0.3143).epsilon(1e-3));

  SUBCASE("a target sitting exactly on a table node needs no update") {
    const double node_torque = table.torque()[120];
    const InversionResult res = invert_torque_amplitude(g, table, node_torque);
    CHECK(res.iterations <= 1);
    CHECK(res.amplitude == doctest::Approx(table.theta()[120]).epsilon(1e-12));
  }

  SUBCASE("targets outside the table range are rejected") {
    CHECK_THROWS_AS(invert_torque_amplitude(g, table, 500.0), std::out_of_range);
    CHECK_THROWS_AS(invert_torque_amplitude(g, table, 0.0), std::out_of_range);
    CHECK_THROWS_AS(invert_torque_amplitude(g, table, -3.0), std::out_of_range);
  }
}

TEST_CASE("equivalent_torque is the quasi-linear spring law") {
  const NseeGeometry g = reference_geometry();
  CHECK(equivalent_torque(g, 0.5, 0.0) == 0.0);

  // Linear in theta for a frozen amplitude.
  for (const double th : {0.01, 0.1, 0.25})
    CHECK(equivalent_torque(g, 0.5, 2.0 * th) ==
          2.0 * equivalent_torque(g, 0.5, th));

  // First-harmonic matching: the fundamental of the quasi-linear output,
  // N_tau(A) * A, equals the fundamental b1 of the true output.
  for (const double a : {0.1, 0.314, 0.8}) {
    const double b1_true = df_numeric(g, a, 4096).b1;
    CHECK(equivalent_torque(g, a, a) == doctest::Approx(b1_true).epsilon(1e-6));
  }
}

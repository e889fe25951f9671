#include "nsea/describing_function.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nsea/nsee_model.hpp"

namespace nsea {

TorqueSampleTable::TorqueSampleTable(std::vector<double> theta,
                                     std::vector<double> torque)
    : theta_(std::move(theta)), torque_(std::move(torque)) {
  if (theta_.size() != torque_.size() || theta_.size() < 2)
    throw std::invalid_argument("TorqueSampleTable: need >= 2 matched samples");
  for (std::size_t i = 1; i < theta_.size(); ++i) {
    if (!(theta_[i] > theta_[i - 1]) || !(torque_[i] > torque_[i - 1]))
      throw std::invalid_argument(
          "TorqueSampleTable: samples must be strictly increasing");
  }
}

DescribingFunctionValue describing_function(const NseeGeometry& geom,
                                            double amplitude) {
  return DescribingFunctionValue{amplitude, df_closed_form(geom, amplitude)};
}

double df_closed_form(const NseeGeometry& geom, double amplitude) {
  if (!(amplitude > 0.0))
    throw std::domain_error("df_closed_form: amplitude must be > 0");
  const double nkb = geom.asymptotic_stiffness();
  const double alpha = geom.alpha();
  const double x = amplitude * amplitude / alpha;
  if (x < 1e-8) {
    // Series branch: the closed form subtracts nearly equal quantities here.
    return 0.75 * (nkb / alpha) * amplitude * amplitude *
           (1.0 - 5.0 * amplitude * amplitude / (6.0 * alpha));
  }
  // 1 + (2/x)(1/sqrt(1+x) - 1) == 1 - 2/(sqrt(1+x)(1 + sqrt(1+x))), exactly.
  const double s = std::sqrt(1.0 + x);
  return nkb * (1.0 - 2.0 / (s * (1.0 + s)));
}

FourierFundamental df_numeric(const NseeGeometry& geom, double amplitude,
                              int n_quad) {
  if (!(amplitude > 0.0))
    throw std::domain_error("df_numeric: amplitude must be > 0");
  if (n_quad < 256)
    throw std::invalid_argument("df_numeric: n_quad must be >= 256");
  const double h = 2.0 * std::numbers::pi / n_quad;
  double sum_cos = 0.0;
  double sum_sin = 0.0;
  for (int j = 0; j <= n_quad; ++j) {
    const double phi = j * h;
    const double tau = torque_maclaurin(geom, amplitude * std::sin(phi));
    const double w = (j == 0 || j == n_quad) ? 0.5 : 1.0;
    sum_cos += w * tau * std::cos(phi);
    sum_sin += w * tau * std::sin(phi);
  }
  FourierFundamental out;
  out.a1 = sum_cos * h / std::numbers::pi;
  out.b1 = sum_sin * h / std::numbers::pi;
  out.n_est = out.b1 / amplitude;
  return out;
}

TorqueSampleTable build_sample_table(const NseeGeometry& geom,
                                     double theta_max, int n_samples) {
  if (!(theta_max > 0.0))
    throw std::invalid_argument("build_sample_table: theta_max must be > 0");
  if (n_samples < 2)
    throw std::invalid_argument("build_sample_table: need >= 2 samples");
  std::vector<double> theta(n_samples);
  std::vector<double> torque(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    theta[i] = theta_max * i / (n_samples - 1);
    torque[i] = torque_maclaurin(geom, theta[i]);
  }
  return TorqueSampleTable(std::move(theta), std::move(torque));
}

InversionResult invert_torque_amplitude(const NseeGeometry& geom,
                                        const TorqueSampleTable& table,
                                        double torque_amplitude) {
  if (!(torque_amplitude > 0.0) || torque_amplitude > table.torque_max())
    throw std::out_of_range(
        "invert_torque_amplitude: target torque " +
        std::to_string(torque_amplitude) +
        " outside table range (0, " + std::to_string(table.torque_max()) + "]");

  // Seed at the node whose sampled torque is nearest the target.
  const auto& tau = table.torque();
  std::size_t nearest = 0;
  double best = std::abs(tau[0] - torque_amplitude);
  for (std::size_t i = 1; i < tau.size(); ++i) {
    const double d = std::abs(tau[i] - torque_amplitude);
    if (d < best) {
      best = d;
      nearest = i;
    }
  }
  double a = table.theta()[nearest];
  if (a == 0.0) a = table.theta()[1];  // slope vanishes at the origin node

  const double nkb = geom.asymptotic_stiffness();
  const double alpha = geom.alpha();
  const double tol = 1e-9 * std::max(1.0, torque_amplitude);
  for (int iter = 0; iter <= 50; ++iter) {
    const double residual = torque_maclaurin(geom, a) - torque_amplitude;
    if (std::abs(residual) < tol) return InversionResult{a, iter};
    const double a2 = a * a;
    const double den = alpha + a2;
    a -= residual * den * den / (nkb * (3.0 * alpha + a2) * a2);
  }
  throw std::runtime_error(
      "invert_torque_amplitude: no convergence within 50 iterations for "
      "target " + std::to_string(torque_amplitude));
}

double amplitude_from_torque(const NseeGeometry& geom,
                             const TorqueSampleTable& table,
                             double torque_amplitude) {
  return invert_torque_amplitude(geom, table, torque_amplitude).amplitude;
}

double equivalent_torque(const NseeGeometry& geom, double amplitude,
                         double theta) {
  return df_closed_form(geom, amplitude) * theta;
}

}  // namespace nsea

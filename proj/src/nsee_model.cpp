#include "nsea/nsee_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nsea {

namespace {

void require_in_range(double theta) {
  if (!(std::abs(theta) < std::numbers::pi))
    throw std::domain_error(
        "nsee: |theta| must be < pi (bars folded past opposition)");
}

}  // namespace

double spring_length(const NseeGeometry& geom, double theta) {
  require_in_range(theta);
  // Half-angle arrangement of sqrt(R^2 + r^2 - 2 R r cos(theta)): immune to
  // the cancellation the direct form suffers near the rest pose.
  const double rest = geom.outer_radius() - geom.inner_radius();
  const double s = std::sin(0.5 * theta);
  return std::sqrt(rest * rest + 4.0 * geom.beta() * s * s);
}

double spring_tension(const NseeGeometry& geom, double theta) {
  const double rest = geom.outer_radius() - geom.inner_radius();
  const double stretch = spring_length(geom, theta) - rest;
  return geom.spring_stiffness() * std::max(0.0, stretch);
}

double torque_exact(const NseeGeometry& geom, double theta) {
  const double ls = spring_length(geom, theta);
  const double rest = geom.outer_radius() - geom.inner_radius();
  return geom.asymptotic_stiffness() * (1.0 - rest / ls) * std::sin(theta);
}

double potential_energy(const NseeGeometry& geom, double theta) {
  const double rest = geom.outer_radius() - geom.inner_radius();
  const double stretch = std::max(0.0, spring_length(geom, theta) - rest);
  return geom.spring_count() * 0.5 * geom.spring_stiffness() * stretch * stretch;
}

double stiffness_exact(const NseeGeometry& geom, double theta) {
  const double ls = spring_length(geom, theta);
  const double rest = geom.outer_radius() - geom.inner_radius();
  const double s = std::sin(theta);
  // Product rule on (1 - rest/ls) sin(theta), with dls/dtheta = beta sin/ls.
  const double tension_term = rest * geom.beta() * s * s / (ls * ls * ls);
  const double moment_term = (1.0 - rest / ls) * std::cos(theta);
  return geom.asymptotic_stiffness() * (tension_term + moment_term);
}

double torque_maclaurin(const NseeGeometry& geom, double theta) {
  const double t2 = theta * theta;
  return geom.asymptotic_stiffness() * theta * t2 / (geom.alpha() + t2);
}

double stiffness_maclaurin(const NseeGeometry& geom, double theta) {
  const double a = geom.alpha();
  const double t2 = theta * theta;
  const double den = a + t2;
  return geom.asymptotic_stiffness() * t2 * (3.0 * a + t2) / (den * den);
}

}  // namespace nsea

#pragma once

#include <stdexcept>

namespace nsea {

/// Geometry of the nonlinear series elastic element: two coaxial bars
/// coupled by n tension springs, attached at radii R (outer) and r (inner).
///
/// The derived shape constants
///   alpha = 2 (R - r)^2 / (R r)   [rad^2]
///   beta  = R r                   [m^2]
/// are computed once at construction; n * k_s * beta is the asymptotic
/// (large-deflection) stiffness of the rational torque law.
class NseeGeometry {
 public:
  NseeGeometry(int spring_count, double spring_stiffness_N_per_m,
               double outer_radius_m, double inner_radius_m)
      : spring_count_(spring_count),
        spring_stiffness_(spring_stiffness_N_per_m),
        outer_radius_(outer_radius_m),
        inner_radius_(inner_radius_m) {
    if (spring_count_ < 1)
      throw std::invalid_argument("NseeGeometry: spring count must be >= 1");
    if (!(spring_stiffness_ > 0.0))
      throw std::invalid_argument("NseeGeometry: spring stiffness must be > 0");
    if (!(inner_radius_ > 0.0) || !(outer_radius_ > inner_radius_))
      throw std::invalid_argument("NseeGeometry: radii must satisfy R > r > 0");
    const double d = outer_radius_ - inner_radius_;
    beta_ = outer_radius_ * inner_radius_;
    alpha_ = 2.0 * d * d / beta_;
  }

  int spring_count() const { return spring_count_; }
  double spring_stiffness() const { return spring_stiffness_; }
  double outer_radius() const { return outer_radius_; }
  double inner_radius() const { return inner_radius_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// n * k_s * beta, the slope the rational torque law approaches as
  /// |theta| grows; also the supremum of the describing-function gain.
  double asymptotic_stiffness() const {
    return spring_count_ * spring_stiffness_ * beta_;
  }

 private:
  int spring_count_;
  double spring_stiffness_;
  double outer_radius_;
  double inner_radius_;
  double alpha_;
  double beta_;
};

}  // namespace nsea

#pragma once

#include "nsea/nsee_geometry.hpp"

namespace nsea {

/// Distance between the two spring attachment points at deflection theta.
/// Result lies in [R - r, R + r]. Throws std::domain_error for |theta| >= pi
/// (the bars fold past opposition and the geometry stops being meaningful).
double spring_length(const NseeGeometry& geom, double theta);

/// Hooke tension of one spring, rest length R - r. Never negative.
double spring_tension(const NseeGeometry& geom, double theta);

/// Exact output torque of the element. Odd in theta.
double torque_exact(const NseeGeometry& geom, double theta);

/// Total elastic energy stored in the n springs. Even in theta, zero at rest.
/// d/dtheta of this is torque_exact; tests lean on that relation.
double potential_energy(const NseeGeometry& geom, double theta);

/// Analytic d(torque_exact)/dtheta. Even in theta and zero at theta = 0
/// (the tension factor vanishes quadratically at rest).
double stiffness_exact(const NseeGeometry& geom, double theta);

/// Rational small-angle reduction of the torque law,
///   n k_s beta theta^3 / (alpha + theta^2),
/// globally defined and strictly increasing, slope n k_s beta at infinity.
double torque_maclaurin(const NseeGeometry& geom, double theta);

/// Analytic derivative of torque_maclaurin:
///   n k_s beta theta^2 (3 alpha + theta^2) / (alpha + theta^2)^2.
double stiffness_maclaurin(const NseeGeometry& geom, double theta);

}  // namespace nsea

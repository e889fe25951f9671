#pragma once

#include <vector>

#include "nsea/nsee_geometry.hpp"

namespace nsea {

/// Amplitude-dependent equivalent gain of the elastic element: for a
/// deflection theta = A sin(wt), the fundamental of the torque output is
/// N_tau(A) * theta. Memoryless odd nonlinearity, so the gain is real.
struct DescribingFunctionValue {
  double amplitude;  // A, rad
  double gain;       // N_tau(A), N m/rad
};

/// Fundamental Fourier pair of the torque output over one excitation cycle.
/// a1 vanishes (odd nonlinearity); b1 / A estimates the equivalent gain.
struct FourierFundamental {
  double a1;     // cosine fundamental, N m
  double b1;     // sine fundamental, N m
  double n_est;  // b1 / A, N m/rad
};

/// Uniform samples (theta_i, torque_maclaurin(theta_i)) used to seed the
/// Newton inversion; strictly increasing in both coordinates.
class TorqueSampleTable {
 public:
  TorqueSampleTable(std::vector<double> theta, std::vector<double> torque);

  const std::vector<double>& theta() const { return theta_; }
  const std::vector<double>& torque() const { return torque_; }
  double theta_max() const { return theta_.back(); }
  double torque_max() const { return torque_.back(); }

 private:
  std::vector<double> theta_;
  std::vector<double> torque_;
};

/// Outcome of the table-seeded Newton inversion.
struct InversionResult {
  double amplitude;  // A with torque_maclaurin(A) = target, rad
  int iterations;    // Newton updates applied
};

/// Bundles a deflection amplitude with its equivalent gain.
DescribingFunctionValue describing_function(const NseeGeometry& geom,
                                            double amplitude);

/// Closed-form describing function of the rational torque law:
///   N_tau(A) = n k_s beta { 1 + (2 alpha / A^2)(1/sqrt(1 + A^2/alpha) - 1) }.
/// Evaluated in a cancellation-free arrangement; for A^2 < 1e-8 alpha the
/// series (3/4)(n k_s beta / alpha) A^2 (1 - 5 A^2 / (6 alpha)) is used.
/// Result lies strictly inside (0, n k_s beta) and increases with A.
double df_closed_form(const NseeGeometry& geom, double amplitude);

/// Independent quadrature route to the same gain: composite trapezoid of
/// the fundamental Fourier integrals of torque_maclaurin(A sin phi) over a
/// full cycle on a uniform n_quad-point grid. Spectrally accurate for this
/// smooth periodic integrand. Requires n_quad >= 256.
FourierFundamental df_numeric(const NseeGeometry& geom, double amplitude,
                              int n_quad = 4096);

/// Samples torque_maclaurin on a uniform grid over [0, theta_max].
TorqueSampleTable build_sample_table(const NseeGeometry& geom,
                                     double theta_max, int n_samples);

/// Solves torque_maclaurin(A) = torque_amplitude by Newton iteration seeded
/// at the table node whose torque is nearest the target:
///   A <- theta - (tau(theta) - A_tau)(alpha + theta^2)^2
///               / (n k_s beta (3 alpha + theta^2) theta^2)
/// Converges when |tau(A) - A_tau| < 1e-9 max(1, A_tau); errors out after
/// 50 iterations or when the target lies outside the table range.
InversionResult invert_torque_amplitude(const NseeGeometry& geom,
                                        const TorqueSampleTable& table,
                                        double torque_amplitude);

/// Convenience wrapper returning just the deflection amplitude.
double amplitude_from_torque(const NseeGeometry& geom,
                             const TorqueSampleTable& table,
                             double torque_amplitude);

/// Quasi-linear spring law N_tau(A) * theta used by the DF simulation path.
double equivalent_torque(const NseeGeometry& geom, double amplitude,
                         double theta);

}  // namespace nsea

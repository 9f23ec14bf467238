#pragma once

// Ground truth for the interferometer: the complete post-interferometer joint
// density matrix built term by term as explicit (2d)x(2d) matrices, with all
// observables taken from partial traces.

#include "purity/interferometer.hpp"

namespace purity {

inline constexpr double kEquivalenceTol = 1e-10;

/// rho^(f) = (1+s)/2 rho_+ + (1-s)/2 rho_-; rho_- uses V++ -> -V-+, V+- -> V--.
/// Under UnitaryStandard a trace deviation above 1e-8 throws ConsistencyViolation.
JointState final_joint_state(const InterferometerConfig& config);

/// Joint state before the beam merger: sigma_x -> sigma_z, sigma_z -> -sigma_x,
/// with phi forced to 0.
JointState pre_merger_state(const InterferometerConfig& config);

struct OracleReport {
  InterferometerConfig config;
  double max_dev_bloch = 0.0;
  double max_dev_pq = 0.0;
  double max_dev_pm = 0.0;
  double max_dev_g_joint = 0.0;
  double unitarity_defect = 0.0;
  double trace = 1.0;

  double max_deviation() const;
  /// Always true under LiteralPaper, where deviations are informational.
  bool pass(double tolerance = kEquivalenceTol) const;
};

OracleReport equivalence_report(const InterferometerConfig& config);

}  // namespace purity

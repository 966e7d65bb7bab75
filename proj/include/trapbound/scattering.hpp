#pragma once

// s-wave scattering length of the attractive square well and the inverse
// calibration of its depth.
//
// Two identical bosons of unit mass have reduced mass 1/2, so the interior
// wave number is k0 = sqrt(|V|) and the dimensionless well parameter is
// x = k0 R. Only the branch 0 < x < pi/2 (no two-body bound state) is
// calibrated; there a(x) = R (1 - tan(x)/x) decreases monotonically from 0 to
// -infinity.

namespace trapbound {

struct CalibrationResult {
  double v = 0.0;           // depth |V|
  double x = 0.0;           // k0 R, in (0, pi/2)
  double a_achieved = 0.0;  // scattering length at v
  int iterations = 0;
  double residual = 0.0;  // |a_achieved - a_target| / |a_target|
};

/// Throws Error(Resonance) when k0 R is within 1e-9 of an odd multiple of pi/2.
double scattering_length(double v, double r);

/// Throws Error(UnreachableBranch) for a_target >= 0 and Error(NoConvergence)
/// if the residual cannot be brought below 1e-10.
CalibrationResult calibrate_depth(double a_target, double r);

inline constexpr double kResonanceGuard = 1e-9;
inline constexpr double kCalibrationTolerance = 1e-10;

}  // namespace trapbound

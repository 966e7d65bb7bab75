#include "trapbound/scattering.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "trapbound/errors.hpp"

namespace trapbound {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxIterations = 400;

double length_of(double x, double r) { return r * (1.0 - std::tan(x) / x); }

}  // namespace

double scattering_length(double v, double r) {
  require(std::isfinite(v) && v > 0.0, ErrorKind::InvalidInput, "well depth must be positive");
  require(std::isfinite(r) && r > 0.0, ErrorKind::InvalidInput, "well range must be positive");
  const double x = std::sqrt(v) * r;
  // Distance to the nearest odd multiple of pi/2.
  const double offset = std::remainder(x - kHalfPi, kPi);
  if (std::abs(offset) < kResonanceGuard) {
    std::ostringstream msg;
    msg << "k0 R = " << x << " is on a zero-energy resonance";
    fail(ErrorKind::Resonance, msg.str());
  }
  return length_of(x, r);
}

CalibrationResult calibrate_depth(double a_target, double r) {
  require(std::isfinite(r) && r > 0.0, ErrorKind::InvalidInput, "well range must be positive");
  require(std::isfinite(a_target), ErrorKind::InvalidInput, "target scattering length must be finite");
  if (a_target >= 0.0) {
    std::ostringstream msg;
    msg << "a = " << a_target
        << " is not reachable without a two-body bound state (requires a < 0)";
    fail(ErrorKind::UnreachableBranch, msg.str());
  }

  // a(x) - a_target is positive at lo and negative at hi.
  double lo = 1e-12;
  double hi = kHalfPi - 1e-12;
  if (std::abs(a_target) > 10.0 * r) lo = kHalfPi - 1.0;

  auto residual_of = [&](double x) { return length_of(x, r) - a_target; };
  double f_lo = residual_of(lo);
  double f_hi = residual_of(hi);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    std::ostringstream msg;
    msg << "target a = " << a_target << " lies outside the bracket for R = " << r;
    fail(ErrorKind::NoConvergence, msg.str());
  }

  // Regula falsi (Illinois) with a bisection fallback whenever the secant
  // step stalls; a(x) is steep near pi/2 and flat near 0.
  int iterations = 0;
  int side = 0;
  double x = 0.5 * (lo + hi);
  for (; iterations < kMaxIterations; ++iterations) {
    double candidate = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(candidate > lo && candidate < hi) || iterations % 4 == 3) candidate = 0.5 * (lo + hi);
    x = candidate;
    const double f = residual_of(x);
    if (std::abs(f) <= 1e-14 * std::abs(a_target)) break;
    if (f > 0.0) {
      lo = x;
      f_lo = f;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = f;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }

  CalibrationResult result;
  result.x = x;
  result.v = (x / r) * (x / r);
  result.a_achieved = scattering_length(result.v, r);
  result.iterations = iterations + 1;
  result.residual = std::abs(result.a_achieved - a_target) / std::abs(a_target);
  if (!(result.residual <= kCalibrationTolerance) || !(result.x < kHalfPi)) {
    std::ostringstream msg;
    msg << "calibration for a = " << a_target << ", R = " << r
        << " stopped with relative residual " << result.residual;
    fail(ErrorKind::NoConvergence, msg.str());
  }
  return result;
}

}  // namespace trapbound

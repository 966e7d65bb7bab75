#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "trapbound/errors.hpp"
#include "trapbound/scattering.hpp"
#include "trapbound/units.hpp"

using Catch::Matchers::WithinRel;
using namespace trapbound;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

TEST_CASE("scattering_length examples", "[scattering]") {
  const double x = std::numbers::pi / 4.0;
  CHECK_THAT(scattering_length(x * x, 1.0), WithinRel(-0.27323954473516269, 1e-14));
  // weak-well limit a ~ -R x^2 / 3
  for (double v : {1e-6, 1e-8, 1e-10}) CHECK_THAT(scattering_length(v, 2.0), WithinRel(-2.0 * 4.0 * v / 3.0, 1e-5));
  // approaching the first resonance from below
  double prev = 0.0;
  for (double gap : {1e-1, 1e-3, 1e-5, 1e-7}) {
    const double a = scattering_length((kHalfPi - gap) * (kHalfPi - gap), 1.0);
    CHECK(a < prev);
    prev = a;
  }
  CHECK(prev < -1e6);
}

TEST_CASE("scattering_length errors", "[scattering]") {
  CHECK(kind_of([] { (void)scattering_length(kHalfPi * kHalfPi, 1.0); }) == ErrorKind::Resonance);
  CHECK(kind_of([] { (void)scattering_length(9.0 * kHalfPi * kHalfPi, 1.0); }) == ErrorKind::Resonance);
  CHECK(kind_of([] { (void)scattering_length(0.0, 1.0); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { (void)scattering_length(1.0, 0.0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("calibrate_depth examples", "[scattering]") {
  const auto r = calibrate_depth(-0.27323954473516269, 1.0);
  CHECK_THAT(r.v, WithinRel(0.61685027506808491, 1e-9));
  CHECK_THAT(r.x, WithinRel(std::numbers::pi / 4.0, 1e-9));
  CHECK(r.residual <= kCalibrationTolerance);
  CHECK(r.iterations > 0);

  CHECK(kind_of([] { (void)calibrate_depth(1.0, 1.0); }) == ErrorKind::UnreachableBranch);
  CHECK(kind_of([] { (void)calibrate_depth(0.0, 1.0); }) == ErrorKind::UnreachableBranch);
  CHECK(kind_of([] { (void)calibrate_depth(-1.0, 0.0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("calibrate_depth for the 7Li parameters", "[scattering]") {
  const auto ctx = units::make_context(145.0, 7.016);
  const double a = units::length_to_trap(units::angstrom_to_m(-14.5), ctx);
  const double r = units::length_to_trap(units::bohr_to_m(2.0), ctx);
  const auto cal = calibrate_depth(a, r);
  CHECK(cal.v >= 1e8);
  CHECK(cal.v <= 1e10);
  // root of R (1 - tan x / x) = a solved in 40-digit arithmetic
  CHECK_THAT(cal.x, WithinRel(1.5262560673822405, 1e-11));
  CHECK_THAT(cal.v, WithinRel(2066246647.7678218, 1e-10));
  CHECK_THAT(scattering_length(cal.v, r), WithinRel(a, 1e-8));
}

TEST_CASE("calibration round trip, branch safety and monotonicity", "[scattering][property]") {
  std::mt19937_64 rng(0x5eed20);
  std::uniform_real_distribution<double> log_ratio(-3.0, 4.0), log_r(-6.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    const double r = std::pow(10.0, log_r(rng));
    const double ratio = std::pow(10.0, log_ratio(rng));
    const double a = -ratio * r;
    const auto cal = calibrate_depth(a, r);
    INFO("a/R = " << -ratio << ", R = " << r);
    CHECK(cal.x > 0.0);
    CHECK(cal.x < kHalfPi);
    CHECK(cal.residual <= kCalibrationTolerance);
    CHECK_THAT(scattering_length(cal.v, r), WithinRel(a, 1e-8));

    const auto deeper = calibrate_depth(a * 1.01, r);
    CHECK(deeper.v > cal.v);
  }
}

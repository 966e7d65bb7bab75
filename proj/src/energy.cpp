#include "trapbound/energy.hpp"

#include <cmath>
#include <string>

#include "trapbound/errors.hpp"

namespace trapbound {

namespace {

void require_positive(double value, const char* name) {
  require(std::isfinite(value) && value > 0.0, ErrorKind::InvalidInput,
          std::string(name) + " must be positive, got " + std::to_string(value));
}

}  // namespace

double EnergyBreakdown::component_scale() const noexcept {
  return std::abs(kinetic_trap) + std::abs(com_correction) + std::abs(interaction);
}

EnergyBreakdown gaussian_bound_k(double sigma, const TrapSystem& system, double b,
                                 PrefactorVariant variant) {
  require_positive(sigma, "sigma");
  validate(system);
  const double n = static_cast<double>(system.n);
  const double inv_s = 1.0 / sigma;
  const double inv_s2 = inv_s * inv_s;
  const double om2 = system.omega * system.omega;

  EnergyBreakdown e;
  e.kinetic_trap = 0.75 * n * inv_s2 + 0.75 * n * om2 * (sigma * sigma);
  e.com_correction = 0.0;
  e.interaction = pair_count(system, variant) * b * detail::kInvTwoPiPow32 * (inv_s2 * inv_s);
  e.total = e.kinetic_trap + e.interaction;
  return e;
}

double pair_correlation_g(double r, double w) {
  require(std::isfinite(r) && r >= 0.0, ErrorKind::InvalidInput, "distance must be >= 0");
  require_positive(w, "w");
  const double scale = w / (2.0 * detail::kPi);
  return scale * std::sqrt(scale) * std::exp(-0.5 * w * r * r);
}

double sphere_fraction_of(double x) {
  require(!std::isnan(x) && x >= 0.0, ErrorKind::InvalidInput, "sphere parameter must be >= 0");
  if (x < detail::kSphereSeriesLimit) {
    // (4/sqrt(pi)) sum_k (-1)^k x^{2k+3} / (k! (2k+3)), normalised to the leading term.
    const double z = x * x;
    const double series =
        1.0 + z * (-3.0 / 5.0 + z * (3.0 / 14.0 + z * (-1.0 / 18.0 + z * (1.0 / 88.0))));
    return detail::kFourThirdsOverSqrtPi * x * z * series;
  }
  const double gauss = detail::kTwoOverSqrtPi * x * std::exp(-x * x);
  if (x > detail::kSphereComplementLimit) return 1.0 - (std::erfc(x) + gauss);
  return std::erf(x) - gauss;
}

double sphere_fraction(double r_range, double w) {
  require_positive(r_range, "well range");
  require_positive(w, "w");
  return sphere_fraction_of(r_range * std::sqrt(0.5 * w));
}

double interaction_term(double w, const TrapSystem& system, const Interaction& interaction) {
  require_positive(w, "w");
  validate(system);
  validate(interaction);
  const double half_pairs = 0.5 * pair_count(system, PrefactorVariant::CorrectedPairCount);
  if (const auto* delta = std::get_if<DeltaInteraction>(&interaction)) {
    return half_pairs * delta->b * detail::kInvTwoPiPow32 * (w * std::sqrt(w));
  }
  const auto& well = std::get<StepWell>(interaction);
  return -half_pairs * well.v * sphere_fraction_of(well.r * std::sqrt(0.5 * w));
}

EnergyBreakdown harmonic_bound_ev(double w, const TrapSystem& system, const Interaction& interaction) {
  require_positive(w, "w");
  validate(system);
  const double n = static_cast<double>(system.n);
  const double om = system.omega;
  const double spread = w + om * om / w;  // (w^2 + Omega^2) / w

  EnergyBreakdown e;
  e.kinetic_trap = 0.75 * n * spread;
  e.com_correction = -0.75 * (spread - 2.0 * om);
  e.interaction = interaction_term(w, system, interaction);
  // Kinetic and centre-of-mass terms combined before rounding.
  e.total = 0.75 * ((n - 1.0) * spread + 2.0 * om) + e.interaction;
  return e;
}

DeltaInteraction effective_delta_strength(const StepWell& step) {
  validate(Interaction{step});
  return DeltaInteraction{-(4.0 * detail::kPi / 3.0) * step.r * step.r * step.r * step.v};
}

}  // namespace trapbound

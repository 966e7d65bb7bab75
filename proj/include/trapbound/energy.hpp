#pragma once

#include "trapbound/model.hpp"

namespace trapbound {

/// Term-by-term value of a variational bound, in units of hbar * Omega.
///
/// `total` is evaluated from a combined expression that stays exact where the
/// kinetic and centre-of-mass terms cancel (N = 1 gives exactly 1.5 Omega for
/// every w), so the component sum agrees with it only up to rounding relative
/// to component_scale().
struct EnergyBreakdown {
  double total = 0.0;
  double kinetic_trap = 0.0;
  double com_correction = 0.0;
  double interaction = 0.0;

  double component_sum() const noexcept { return kinetic_trap + com_correction + interaction; }
  double component_scale() const noexcept;
};

/// Gaussian trial-state bound K(sigma) for a contact interaction of strength b.
/// com_correction is always zero.
EnergyBreakdown gaussian_bound_k(double sigma, const TrapSystem& system, double b,
                                 PrefactorVariant variant = PrefactorVariant::CorrectedPairCount);

/// Zero-temperature pair correlation of the harmonic model: (w/2pi)^{3/2} exp(-w r^2 / 2).
double pair_correlation_g(double r, double w);

/// Fraction of the pair correlation enclosed by a sphere of radius r_range.
double sphere_fraction(double r_range, double w);

/// Same quantity as a function of x = R sqrt(w/2):
/// F(x) = erf(x) - (2x/sqrt(pi)) exp(-x^2).
double sphere_fraction_of(double x);

/// (1/2) N (N-1) \int v(r) g(r) d^3r for the given interaction.
double interaction_term(double w, const TrapSystem& system, const Interaction& interaction);

/// Harmonic-model bound E_v(w).
EnergyBreakdown harmonic_bound_ev(double w, const TrapSystem& system, const Interaction& interaction);

/// Contact strength with the same volume integral as the well: -(4pi/3) R^3 |V|.
DeltaInteraction effective_delta_strength(const StepWell& step);

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPiPow32 = 15.749609945722419;     // (2 pi)^{3/2}
inline constexpr double kInvTwoPiPow32 = 0.063493635934240969;  // (2 pi)^{-3/2}
inline constexpr double kTwoOverSqrtPi = 1.1283791670955126;     // 2 / sqrt(pi)
inline constexpr double kFourThirdsOverSqrtPi = 0.75225277806367508;  // 4 / (3 sqrt(pi))

// Crossovers of sphere_fraction_of between the power series, the erf form and
// the erfc form.
inline constexpr double kSphereSeriesLimit = 1e-2;
inline constexpr double kSphereComplementLimit = 5.0;

}  // namespace detail

}  // namespace trapbound

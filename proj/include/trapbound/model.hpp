#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

namespace trapbound {

/// N bosons in an isotropic harmonic trap of frequency omega (trap units).
struct TrapSystem {
  std::int64_t n = 1;
  double omega = 1.0;
};

/// Zero-range contact interaction; b < 0 is attractive.
struct DeltaInteraction {
  double b = 0.0;
};

/// Attractive spherical square well: -v for r < r_range, 0 outside. v is the
/// depth magnitude.
struct StepWell {
  double v = 0.0;
  double r = 0.0;
};

using Interaction = std::variant<DeltaInteraction, StepWell>;

/// Pair-count prefactor of the Gaussian bound: N^2 as originally printed, or
/// the N(N-1) correction.
enum class PrefactorVariant { PaperNSquared, CorrectedPairCount };

/// Which variational functional a landscape is built from: the Gaussian width
/// bound K(sigma) or the harmonic-model bound E_v(w).
enum class Functional { Gaussian, Harmonic };

void validate(const TrapSystem& system);
void validate(const Interaction& interaction);

double pair_count(const TrapSystem& system, PrefactorVariant variant);

std::string_view to_string(PrefactorVariant variant);
std::string_view to_string(Functional functional);

inline bool is_attractive_delta(const Interaction& interaction) {
  const auto* delta = std::get_if<DeltaInteraction>(&interaction);
  return delta != nullptr && delta->b < 0.0;
}

}  // namespace trapbound

#pragma once

// Batched evaluation of the variational bounds over parameter grids.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The dispatching entry points pick the variant at runtime from the
// CPU features, unless overridden by set_isa_override() or the
// TRAPBOUND_KERNEL environment variable (scalar | avx2 | auto).

#include <optional>
#include <span>
#include <string_view>

#include "trapbound/model.hpp"

namespace trapbound::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

bool isa_available(Isa isa);
Isa active_isa();
void set_isa_override(std::optional<Isa> isa);

/// Output columns; each span must have the same length as the input.
struct BreakdownColumns {
  std::span<double> total;
  std::span<double> kinetic_trap;
  std::span<double> com_correction;
  std::span<double> interaction;
};

void harmonic_bound(std::span<const double> w, const TrapSystem& system,
                    const Interaction& interaction, const BreakdownColumns& out);
void gaussian_bound(std::span<const double> sigma, const TrapSystem& system, double b,
                    PrefactorVariant variant, const BreakdownColumns& out);
void sphere_fraction(std::span<const double> x, std::span<double> out);

namespace scalar {
void harmonic_bound(std::span<const double> w, const TrapSystem& system,
                    const Interaction& interaction, const BreakdownColumns& out);
void gaussian_bound(std::span<const double> sigma, const TrapSystem& system, double b,
                    PrefactorVariant variant, const BreakdownColumns& out);
void sphere_fraction(std::span<const double> x, std::span<double> out);
}  // namespace scalar

// Defined only when the library is built with AVX2 kernels; the dispatcher
// never calls them on a CPU without AVX2 and FMA.
namespace avx2 {
void harmonic_bound(std::span<const double> w, const TrapSystem& system,
                    const Interaction& interaction, const BreakdownColumns& out);
void gaussian_bound(std::span<const double> sigma, const TrapSystem& system, double b,
                    PrefactorVariant variant, const BreakdownColumns& out);
void sphere_fraction(std::span<const double> x, std::span<double> out);
}  // namespace avx2

}  // namespace trapbound::kernels

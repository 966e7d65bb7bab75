#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

#include "trapbound/errors.hpp"
#include "trapbound/kernels.hpp"

namespace trapbound::kernels {

namespace {

// -1 = no override, otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(TRAPBOUND_HAS_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa best_available() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa from_environment() {
  static const Isa isa = [] {
    const char* env = std::getenv("TRAPBOUND_KERNEL");
    if (env == nullptr) return best_available();
    const auto parsed = parse_isa(env);
    if (!parsed || !isa_available(*parsed)) return best_available();
    return *parsed;
  }();
  return isa;
}

void check_columns(std::size_t n, const BreakdownColumns& out) {
  require(out.total.size() == n && out.kinetic_trap.size() == n && out.com_correction.size() == n &&
              out.interaction.size() == n,
          ErrorKind::InvalidInput, "output columns must match the input length");
}

void check_positive(std::span<const double> values, const char* name) {
  for (double v : values)
    require(v > 0.0 && v < std::numeric_limits<double>::infinity(), ErrorKind::InvalidInput,
            std::string(name) + " must be positive, got " + std::to_string(v));
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "auto") return best_available();
  return std::nullopt;
}

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa active_isa() {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return from_environment();
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa) {
    require(isa_available(*isa), ErrorKind::InvalidInput,
            "kernel variant '" + std::string(to_string(*isa)) + "' is not available on this CPU");
    g_override.store(static_cast<int>(*isa), std::memory_order_relaxed);
  } else {
    g_override.store(-1, std::memory_order_relaxed);
  }
}

void harmonic_bound(std::span<const double> w, const TrapSystem& system,
                    const Interaction& interaction, const BreakdownColumns& out) {
  validate(system);
  validate(interaction);
  check_columns(w.size(), out);
  check_positive(w, "w");
#if defined(TRAPBOUND_HAS_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::harmonic_bound(w, system, interaction, out);
#endif
  scalar::harmonic_bound(w, system, interaction, out);
}

void gaussian_bound(std::span<const double> sigma, const TrapSystem& system, double b,
                    PrefactorVariant variant, const BreakdownColumns& out) {
  validate(system);
  validate(Interaction{DeltaInteraction{b}});
  check_columns(sigma.size(), out);
  check_positive(sigma, "sigma");
#if defined(TRAPBOUND_HAS_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::gaussian_bound(sigma, system, b, variant, out);
#endif
  scalar::gaussian_bound(sigma, system, b, variant, out);
}

void sphere_fraction(std::span<const double> x, std::span<double> out) {
  require(out.size() == x.size(), ErrorKind::InvalidInput, "output must match the input length");
  for (double v : x)
    require(v >= 0.0, ErrorKind::InvalidInput, "sphere parameter must be >= 0");
#if defined(TRAPBOUND_HAS_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::sphere_fraction(x, out);
#endif
  scalar::sphere_fraction(x, out);
}

}  // namespace trapbound::kernels

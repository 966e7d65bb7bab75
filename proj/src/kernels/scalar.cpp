#include <cstddef>

#include "trapbound/energy.hpp"
#include "trapbound/kernels.hpp"

namespace trapbound::kernels::scalar {

namespace {

void store(const BreakdownColumns& out, std::size_t i, const EnergyBreakdown& e) {
  out.total[i] = e.total;
  out.kinetic_trap[i] = e.kinetic_trap;
  out.com_correction[i] = e.com_correction;
  out.interaction[i] = e.interaction;
}

}  // namespace

void harmonic_bound(std::span<const double> w, const TrapSystem& system,
                    const Interaction& interaction, const BreakdownColumns& out) {
  for (std::size_t i = 0; i < w.size(); ++i) store(out, i, harmonic_bound_ev(w[i], system, interaction));
}

void gaussian_bound(std::span<const double> sigma, const TrapSystem& system, double b,
                    PrefactorVariant variant, const BreakdownColumns& out) {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    store(out, i, gaussian_bound_k(sigma[i], system, b, variant));
}

void sphere_fraction(std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = sphere_fraction_of(x[i]);
}

}  // namespace trapbound::kernels::scalar

#include "trapbound/units.hpp"

#include <cmath>
#include <string>

#include "trapbound/errors.hpp"

namespace trapbound::units {

UnitContext UnitContext::make(double frequency_hz, double mass_amu) {
  require(std::isfinite(frequency_hz) && frequency_hz > 0.0, ErrorKind::InvalidInput,
          "trap frequency must be positive, got " + std::to_string(frequency_hz) + " Hz");
  require(std::isfinite(mass_amu) && mass_amu > 0.0, ErrorKind::InvalidInput,
          "particle mass must be positive, got " + std::to_string(mass_amu) + " amu");
  return UnitContext(2.0 * kPi * frequency_hz, mass_amu * kAtomicMassUnit);
}

double UnitContext::a_ho_si() const noexcept { return std::sqrt(kHbar / (mass_si_ * omega_si_)); }

UnitContext make_context(double frequency_hz, double mass_amu) {
  return UnitContext::make(frequency_hz, mass_amu);
}

double length_to_trap(double x_si, const UnitContext& ctx) { return x_si / ctx.a_ho_si(); }

double energy_to_trap(double e_si, const UnitContext& ctx) { return e_si / ctx.energy_quantum_si(); }

}  // namespace trapbound::units

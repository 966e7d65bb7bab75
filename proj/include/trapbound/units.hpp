#pragma once

// Conversions between laboratory SI quantities and trap units (hbar = m = 1,
// lengths in a_ho = sqrt(hbar / (m * Omega)), energies in hbar * Omega).

namespace trapbound::units {

// CODATA 2018.
inline constexpr double kHbar = 1.054571817e-34;          // J s
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kBohrRadius = 0.529177210903e-10;  // m
inline constexpr double kAngstrom = 1e-10;                 // m
inline constexpr double kPi = 3.14159265358979323846;

class UnitContext {
 public:
  /// Throws Error(InvalidInput) unless both arguments are positive and finite.
  static UnitContext make(double frequency_hz, double mass_amu);

  double omega_si() const noexcept { return omega_si_; }
  double mass_si() const noexcept { return mass_si_; }
  double a_ho_si() const noexcept;
  double energy_quantum_si() const noexcept { return kHbar * omega_si_; }

 private:
  UnitContext(double omega_si, double mass_si) : omega_si_(omega_si), mass_si_(mass_si) {}

  double omega_si_;
  double mass_si_;
};

UnitContext make_context(double frequency_hz, double mass_amu);

double length_to_trap(double x_si, const UnitContext& ctx);
double energy_to_trap(double e_si, const UnitContext& ctx);

inline double angstrom_to_m(double x) { return x * kAngstrom; }
inline double bohr_to_m(double x) { return x * kBohrRadius; }

}  // namespace trapbound::units

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "trapbound/model.hpp"
#include "trapbound/scattering.hpp"
#include "trapbound/units.hpp"

namespace trapbound {

/// Contact interaction, strength in trap units.
struct DeltaSpec {
  double b = 0.0;
};

/// Step well with explicit depth (hbar Omega) and range (Bohr radii).
struct StepDepthSpec {
  double v = 0.0;
  double r_bohr = 0.0;
};

/// Step well calibrated to a scattering length (Angstrom) at a range (Bohr radii).
struct StepScatteringSpec {
  double a_angstrom = 0.0;
  double r_bohr = 0.0;
};

using InteractionSpec = std::variant<DeltaSpec, StepDepthSpec, StepScatteringSpec>;

struct Scenario {
  std::string name = "custom";
  double frequency_hz = 145.0;
  double mass_amu = 7.016;
  std::optional<InteractionSpec> interaction;
  std::optional<std::int64_t> n;
  PrefactorVariant variant = PrefactorVariant::CorrectedPairCount;
  Functional functional = Functional::Harmonic;
};

/// Built-in scenarios by name; currently only "li7-hulet":
/// 7Li (7.016 amu) in a 145 Hz trap, a = -14.5 A, R = 2 a0, N = 1000.
std::optional<Scenario> builtin_scenario(std::string_view name);

/// JSON scenario file: one object, unknown keys rejected. Keys: name,
/// frequency_hz, mass_amu, n, variant ("paper" | "corrected"), functional
/// ("harmonic" | "gaussian"), interaction ("delta" | "step"), b, v, r_bohr,
/// a_angstrom.
Scenario parse_scenario_json(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);
std::string scenario_to_json(const Scenario& scenario);

/// A scenario converted to trap units, with the step well calibrated if needed.
struct ResolvedScenario {
  Scenario scenario;
  units::UnitContext context;
  TrapSystem system;
  Interaction interaction;
  std::optional<CalibrationResult> calibration;
  std::optional<double> range_trap;  // R in a_ho, step wells only
};

ResolvedScenario resolve(const Scenario& scenario);

std::optional<PrefactorVariant> parse_variant(std::string_view name);
std::optional<Functional> parse_functional(std::string_view name);

}  // namespace trapbound

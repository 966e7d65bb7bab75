#include "trapbound/model.hpp"

#include <cmath>
#include <string>

#include "trapbound/errors.hpp"

namespace trapbound {

void validate(const TrapSystem& system) {
  require(system.n >= 1, ErrorKind::InvalidInput,
          "particle count must be >= 1, got " + std::to_string(system.n));
  require(std::isfinite(system.omega) && system.omega > 0.0, ErrorKind::InvalidInput,
          "trap frequency must be positive");
}

void validate(const Interaction& interaction) {
  if (const auto* delta = std::get_if<DeltaInteraction>(&interaction)) {
    require(std::isfinite(delta->b), ErrorKind::InvalidInput, "delta strength must be finite");
    return;
  }
  const auto& well = std::get<StepWell>(interaction);
  require(std::isfinite(well.v) && well.v > 0.0, ErrorKind::InvalidInput,
          "step-well depth must be positive");
  require(std::isfinite(well.r) && well.r > 0.0, ErrorKind::InvalidInput,
          "step-well range must be positive");
}

double pair_count(const TrapSystem& system, PrefactorVariant variant) {
  const auto n = static_cast<double>(system.n);
  return variant == PrefactorVariant::PaperNSquared ? n * n : n * (n - 1.0);
}

std::string_view to_string(PrefactorVariant variant) {
  return variant == PrefactorVariant::PaperNSquared ? "paper" : "corrected";
}

std::string_view to_string(Functional functional) {
  return functional == Functional::Gaussian ? "gaussian" : "harmonic";
}

}  // namespace trapbound

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trapbound/energy.hpp"
#include "trapbound/model.hpp"
#include "trapbound/optimize.hpp"

namespace trapbound {

enum class Parameter { Sigma, W };

std::string_view to_string(Parameter parameter);

struct LandscapePoint {
  double location = 0.0;
  EnergyBreakdown energy;
};

/// A variational bound sampled on a log grid; locations strictly increasing.
struct EnergyLandscape {
  Parameter parameter = Parameter::W;
  Functional functional = Functional::Harmonic;
  std::vector<LandscapePoint> grid;
  TrapSystem system;
  Interaction interaction;
  PrefactorVariant variant = PrefactorVariant::CorrectedPairCount;
};

EnergyLandscape scan(const TrapSystem& system, const Interaction& interaction, PrefactorVariant variant,
                     Functional functional, double lo, double hi, double points_per_decade);

inline EnergyLandscape scan(const TrapSystem& system, const Interaction& interaction,
                            PrefactorVariant variant, double w_min, double w_max,
                            double points_per_decade) {
  return scan(system, interaction, variant, Functional::Harmonic, w_min, w_max, points_per_decade);
}

/// Critical points of a sampled landscape, refined through the point-wise functional.
std::vector<CriticalPoint> critical_points(const EnergyLandscape& landscape);

struct BarrierReport {
  CriticalPoint local_min;
  CriticalPoint barrier_top;
  std::optional<CriticalPoint> global_min;
  double barrier_height = 0.0;          // barrier_top.energy - local_min.energy
  std::optional<double> depth_ratio;    // barrier_height / |V|, step wells only
};

/// Barrier between the metastable minimum and the global minimum (or the
/// collapse edge) from a list of critical points. Throws
/// Error(NoMetastableState) when there is no local minimum with a barrier.
BarrierReport barrier_report_from(std::span<const CriticalPoint> points,
                                  std::optional<double> well_depth = std::nullopt);

/// Scans E_v over the default window [1e-3, 1e12] Omega and builds the report.
BarrierReport barrier_report(const TrapSystem& system, const StepWell& well,
                             PrefactorVariant variant = PrefactorVariant::CorrectedPairCount,
                             double points_per_decade = 200.0);

inline constexpr std::string_view kCsvHeader = "param,total,kinetic_trap,com_correction,interaction";

void export_csv(const EnergyLandscape& landscape, std::ostream& out);
void export_csv(const EnergyLandscape& landscape, const std::filesystem::path& destination);

/// Reads a landscape CSV written by export_csv.
std::vector<LandscapePoint> parse_csv(std::istream& in);

void render_svg(const EnergyLandscape& landscape, std::span<const CriticalPoint> points,
                std::ostream& out);
void render_svg(const EnergyLandscape& landscape, std::span<const CriticalPoint> points,
                const std::filesystem::path& destination);

}  // namespace trapbound

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trapbound/model.hpp"

namespace trapbound {

using PointObjective = std::function<double(double)>;
using BatchObjective = std::function<void(std::span<const double>, std::span<double>)>;

/// A one-dimensional energy function of the variational parameter. The batch
/// form is used for grid scans; refinement always goes through the point form.
class Objective {
 public:
  Objective(PointObjective point, BatchObjective batch = {});

  double operator()(double x) const { return point_(x); }
  void evaluate(std::span<const double> x, std::span<double> out) const;

 private:
  PointObjective point_;
  BatchObjective batch_;
};

/// Total energy of the chosen functional as an objective. The Gaussian
/// functional needs a contact interaction; the harmonic functional accepts
/// only the corrected prefactor.
Objective make_objective(Functional functional, const TrapSystem& system,
                         const Interaction& interaction,
                         PrefactorVariant variant = PrefactorVariant::CorrectedPairCount);

/// Endpoint-inclusive logarithmic grid with `points_per_decade` spacing.
std::vector<double> log_grid(double lo, double hi, double points_per_decade);

struct Extremum {
  double location = 0.0;
  double energy = 0.0;
};

/// Brent's golden-section/parabolic minimisation on (lo, hi); logarithmic in
/// the parameter when lo > 0. Throws Error(NoInteriorMinimum) unless an
/// interior probe lies below both ends.
Extremum minimize_local(const PointObjective& f, double lo, double hi, double rel_tol = 1e-10);
Extremum maximize_local(const PointObjective& f, double lo, double hi, double rel_tol = 1e-10);

/// Brent from a known bracket lo < guess < hi with f(guess) below both ends.
Extremum refine_minimum(const PointObjective& f, double lo, double guess, double hi,
                        double rel_tol = 1e-10);

enum class CriticalKind { LocalMin, LocalMax, GlobalMin, BoundaryDecreasing };
enum class CurvatureSign { Positive, Negative, Zero };

std::string_view to_string(CriticalKind kind);

struct CriticalPoint {
  double location = 0.0;
  double energy = 0.0;
  CriticalKind kind = CriticalKind::LocalMin;
  CurvatureSign curvature = CurvatureSign::Zero;

  bool is_minimum() const noexcept {
    return kind == CriticalKind::LocalMin || kind == CriticalKind::GlobalMin;
  }
};

/// Critical points of `objective` on a log grid over [lo, hi].
///
/// Extrema are strict sign changes of the discrete slope (differences within
/// rounding of the values count as flat), each refined by Brent. The lowest
/// minimum is labelled GlobalMin unless the energy keeps decreasing towards a
/// window edge, which is reported as BoundaryDecreasing instead.
std::vector<CriticalPoint> find_critical_points(const Objective& objective, double lo, double hi,
                                                double points_per_decade);

/// Same, on values already sampled at `grid`.
std::vector<CriticalPoint> critical_points_from_samples(const PointObjective& refine,
                                                        std::span<const double> grid,
                                                        std::span<const double> values);

/// True when the sampled values contain a strict discrete local minimum.
bool has_discrete_minimum(std::span<const double> values);

enum class Boundedness { BoundedBelow, UnboundedBelow };

struct StabilityProbe {
  double location = 0.0;
  double energy = 0.0;
  bool decreasing = false;  // energy still falling at the probe
};

struct StabilityVerdict {
  Boundedness classification = Boundedness::BoundedBelow;
  StabilityProbe probe;
  /// For UnboundedBelow: a probe with energy below the requested floor.
  std::optional<StabilityProbe> witness;
  /// A local minimum exists besides the collapse direction or a lower global minimum.
  bool metastable = false;
};

inline constexpr double kDefaultWitnessFloor = -1e6;
inline constexpr double kStabilityProbeW = 1e12;       // in units of Omega
inline constexpr double kStabilityProbeSigma = 1e-6;   // in units of a_ho

/// Stability of E_v(w). Attractive contact interactions with at least one pair
/// are unbounded below; every step well is bounded.
StabilityVerdict classify_stability(const TrapSystem& system, const Interaction& interaction,
                                    double floor = kDefaultWitnessFloor);

/// Stability of K(sigma) for a contact interaction.
StabilityVerdict classify_stability_gaussian(const TrapSystem& system, double b,
                                             PrefactorVariant variant,
                                             double floor = kDefaultWitnessFloor);

/// Default scan windows, in units of Omega (w) or a_ho (sigma).
struct ScanWindow {
  double lo = 1e-3;
  double hi = 1e12;
};
ScanWindow default_window(Functional functional);

/// Window and grid on which the existence of a trap-scale local minimum is
/// decided. n_max is defined relative to this policy.
struct CriticalNumberPolicy {
  double window_lo = 1e-2;
  double window_hi = 1e2;
  double points_per_decade = 200.0;

  std::string describe() const;
};

bool has_local_minimum(const Objective& objective, const CriticalNumberPolicy& policy = {});

struct CriticalNumberResult {
  std::int64_t n_max = 0;
  std::int64_t last_stable = 0;
  std::int64_t first_unstable = 0;
  std::string criterion;
};

/// Largest N with a trap-scale local minimum, by integer bisection on
/// [n_lo, n_hi]. Throws Error(BracketInvalid) unless a minimum exists at n_lo
/// and none at n_hi.
CriticalNumberResult critical_number(const Interaction& interaction, double omega,
                                     PrefactorVariant variant, Functional functional,
                                     std::int64_t n_lo, std::int64_t n_hi,
                                     const CriticalNumberPolicy& policy = {});

/// critical_number with the upper end found by doubling from max(2, 2 n_lo).
/// Throws Error(NoConvergence) if a minimum persists beyond N = 2^40.
CriticalNumberResult critical_number_auto(const Interaction& interaction, double omega,
                                          PrefactorVariant variant, Functional functional,
                                          std::int64_t n_lo, const CriticalNumberPolicy& policy = {});

/// Fold point of e(s) = (3/4)(s^-2 + s^2) - c s^-3, where the local minimum
/// merges with the barrier: s* = 5^{-1/4}, c* = (2/5) 5^{-1/4}. The reduced
/// coupling is c = (pairs/N) |B| (2 pi)^{-3/2} for Omega = 1.
struct GaussianCriticalStrength {
  double s_star = 0.0;
  double c_star = 0.0;
};
GaussianCriticalStrength critical_strength_gaussian();

}  // namespace trapbound

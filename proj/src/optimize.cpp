#include "trapbound/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "trapbound/energy.hpp"
#include "trapbound/errors.hpp"
#include "trapbound/kernels.hpp"

namespace trapbound {

namespace {

constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt 5) / 2
constexpr int kBrentMaxIterations = 500;
constexpr int kBracketProbes = 33;
// Differences below this many ulps of the larger value count as flat.
constexpr double kFlatUlps = 64.0;

Extremum brent(const PointObjective& g, double a, double x, double b, double fx, double rel_tol,
               bool log_space) {
  const double span0 = b - a;
  double w = x, v = x, fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int iter = 0; iter < kBrentMaxIterations; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = log_space ? rel_tol + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)
                                  : rel_tol * std::abs(x) + 1e-12 * rel_tol * span0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;

    bool golden = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, m - x);
        golden = false;
      }
    }
    if (golden) {
      e = (x >= m) ? a - x : b - x;
      d = kGolden * e;
    }
    const double u = std::abs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
    const double fu = g(u);
    if (fu <= fx) {
      (u >= x ? a : b) = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      (u < x ? a : b) = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return {log_space ? std::exp(x) : x, fx};
}

void check_bracket(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo >= 0.0 && lo < hi, ErrorKind::InvalidInput,
          "bracket must satisfy 0 <= lo < hi");
}

int slope_sign(double left, double right) {
  const double diff = right - left;
  const double flat =
      kFlatUlps * std::numeric_limits<double>::epsilon() * std::max(std::abs(left), std::abs(right));
  if (std::abs(diff) <= flat) return 0;
  return diff > 0.0 ? 1 : -1;
}

struct Turn {
  std::size_t left;   // last point before the extremum
  std::size_t guess;  // discrete extremum
  std::size_t right;  // first point after
  bool minimum;
};

struct SlopeSummary {
  std::vector<Turn> turns;
  int first_sign = 0;
  int last_sign = 0;
};

SlopeSummary summarize(std::span<const double> values) {
  SlopeSummary out;
  std::ptrdiff_t last = -1;
  int last_sign = 0;
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    const int s = slope_sign(values[j], values[j + 1]);
    if (s == 0) continue;
    if (out.first_sign == 0) out.first_sign = s;
    if (last >= 0 && s != last_sign) {
      const auto left = static_cast<std::size_t>(last);
      out.turns.push_back({left, (left + 1 + j) / 2, j + 1, last_sign < 0});
    }
    last = static_cast<std::ptrdiff_t>(j);
    last_sign = s;
  }
  out.last_sign = last_sign;
  return out;
}

Objective harmonic_objective(const TrapSystem& system, const Interaction& interaction) {
  return Objective(
      [system, interaction](double w) { return harmonic_bound_ev(w, system, interaction).total; },
      [system, interaction](std::span<const double> w, std::span<double> out) {
        std::vector<double> kin(w.size()), com(w.size()), inter(w.size());
        kernels::harmonic_bound(w, system, interaction, {out, kin, com, inter});
      });
}

Objective gaussian_objective(const TrapSystem& system, double b, PrefactorVariant variant) {
  return Objective(
      [system, b, variant](double s) { return gaussian_bound_k(s, system, b, variant).total; },
      [system, b, variant](std::span<const double> s, std::span<double> out) {
        std::vector<double> kin(s.size()), com(s.size()), inter(s.size());
        kernels::gaussian_bound(s, system, b, variant, {out, kin, com, inter});
      });
}

}  // namespace

Objective::Objective(PointObjective point, BatchObjective batch)
    : point_(std::move(point)), batch_(std::move(batch)) {}

void Objective::evaluate(std::span<const double> x, std::span<double> out) const {
  require(x.size() == out.size(), ErrorKind::InvalidInput, "output must match the input length");
  if (batch_) {
    batch_(x, out);
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = point_(x[i]);
}

Objective make_objective(Functional functional, const TrapSystem& system,
                         const Interaction& interaction, PrefactorVariant variant) {
  validate(system);
  validate(interaction);
  if (functional == Functional::Gaussian) {
    const auto* delta = std::get_if<DeltaInteraction>(&interaction);
    require(delta != nullptr, ErrorKind::InvalidInput,
            "the Gaussian bound is defined for a contact interaction only");
    return gaussian_objective(system, delta->b, variant);
  }
  require(variant == PrefactorVariant::CorrectedPairCount, ErrorKind::InvalidInput,
          "the N^2 prefactor variant applies to the Gaussian bound only");
  return harmonic_objective(system, interaction);
}

std::vector<double> log_grid(double lo, double hi, double points_per_decade) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo < hi, ErrorKind::InvalidInput,
          "grid requires 0 < lo < hi");
  require(std::isfinite(points_per_decade) && points_per_decade >= 1.0, ErrorKind::InvalidInput,
          "points per decade must be >= 1");
  const double decades = std::log10(hi / lo);
  const double steps_exact = decades * points_per_decade;
  const double nearest = std::round(steps_exact);
  const auto steps = static_cast<std::size_t>(
      std::abs(steps_exact - nearest) < 1e-9 * std::max(1.0, nearest) ? nearest : std::ceil(steps_exact));
  require(steps <= 100'000'000, ErrorKind::InvalidInput, "grid too large");

  std::vector<double> grid(std::max<std::size_t>(steps, 1) + 1);
  const double log_lo = std::log(lo);
  const double log_span = std::log(hi) - log_lo;
  const double n = static_cast<double>(grid.size() - 1);
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = std::exp(log_lo + log_span * (static_cast<double>(i) / n));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

Extremum refine_minimum(const PointObjective& f, double lo, double guess, double hi, double rel_tol) {
  check_bracket(lo, hi);
  require(lo < guess && guess < hi, ErrorKind::InvalidInput, "guess must lie inside the bracket");
  if (lo > 0.0) {
    auto g = [&f](double t) { return f(std::exp(t)); };
    return brent(g, std::log(lo), std::log(guess), std::log(hi), f(guess), rel_tol, true);
  }
  return brent(f, lo, guess, hi, f(guess), rel_tol, false);
}

Extremum minimize_local(const PointObjective& f, double lo, double hi, double rel_tol) {
  check_bracket(lo, hi);
  const bool log_space = lo > 0.0;
  const double t_lo = log_space ? std::log(lo) : lo;
  const double t_hi = log_space ? std::log(hi) : hi;
  auto at = [&](int i) {
    const double t = t_lo + (t_hi - t_lo) * (static_cast<double>(i) / (kBracketProbes + 1));
    return log_space ? std::exp(t) : t;
  };

  const double f_lo = f(lo);
  const double f_hi = f(hi);
  int best = -1;
  double f_best = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= kBracketProbes; ++i) {
    const double value = f(at(i));
    if (value < f_best) {
      f_best = value;
      best = i;
    }
  }
  if (!(f_best < f_lo && f_best < f_hi)) {
    std::ostringstream msg;
    msg << "no interior probe in (" << lo << ", " << hi << ") lies below both ends";
    fail(ErrorKind::NoInteriorMinimum, msg.str());
  }
  const double left = best == 1 ? lo : at(best - 1);
  const double right = best == kBracketProbes ? hi : at(best + 1);
  return refine_minimum(f, left, at(best), right, rel_tol);
}

Extremum maximize_local(const PointObjective& f, double lo, double hi, double rel_tol) {
  auto negated = [&f](double x) { return -f(x); };
  const Extremum e = minimize_local(negated, lo, hi, rel_tol);
  return {e.location, -e.energy};
}

std::string_view to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::LocalMin: return "local-min";
    case CriticalKind::LocalMax: return "local-max";
    case CriticalKind::GlobalMin: return "global-min";
    case CriticalKind::BoundaryDecreasing: return "boundary-decreasing";
  }
  return "unknown";
}

std::vector<CriticalPoint> critical_points_from_samples(const PointObjective& refine,
                                                        std::span<const double> grid,
                                                        std::span<const double> values) {
  require(grid.size() == values.size(), ErrorKind::InvalidInput, "grid and values differ in length");
  std::vector<CriticalPoint> points;
  if (grid.size() < 2) return points;

  const SlopeSummary summary = summarize(values);
  auto negated = [&refine](double x) { return -refine(x); };
  for (const Turn& turn : summary.turns) {
    CriticalPoint cp;
    if (turn.minimum) {
      const Extremum e = refine_minimum(refine, grid[turn.left], grid[turn.guess], grid[turn.right]);
      cp = {e.location, e.energy, CriticalKind::LocalMin, CurvatureSign::Positive};
    } else {
      const Extremum e = refine_minimum(negated, grid[turn.left], grid[turn.guess], grid[turn.right]);
      cp = {e.location, -e.energy, CriticalKind::LocalMax, CurvatureSign::Negative};
    }
    points.push_back(cp);
  }

  const bool falls_left = summary.first_sign > 0;
  const bool falls_right = summary.last_sign < 0;
  if (!falls_left && !falls_right) {
    auto lowest = points.end();
    for (auto it = points.begin(); it != points.end(); ++it)
      if (it->is_minimum() && (lowest == points.end() || it->energy < lowest->energy)) lowest = it;
    if (lowest != points.end()) lowest->kind = CriticalKind::GlobalMin;
  }
  if (falls_left)
    points.insert(points.begin(),
                  {grid.front(), values.front(), CriticalKind::BoundaryDecreasing, CurvatureSign::Zero});
  if (falls_right)
    points.push_back({grid.back(), values.back(), CriticalKind::BoundaryDecreasing, CurvatureSign::Zero});
  return points;
}

std::vector<CriticalPoint> find_critical_points(const Objective& objective, double lo, double hi,
                                                double points_per_decade) {
  const std::vector<double> grid = log_grid(lo, hi, points_per_decade);
  std::vector<double> values(grid.size());
  objective.evaluate(grid, values);
  return critical_points_from_samples([&objective](double x) { return objective(x); }, grid, values);
}

bool has_discrete_minimum(std::span<const double> values) {
  const SlopeSummary summary = summarize(values);
  return std::any_of(summary.turns.begin(), summary.turns.end(),
                     [](const Turn& t) { return t.minimum; });
}

ScanWindow default_window(Functional functional) {
  return functional == Functional::Harmonic ? ScanWindow{1e-3, 1e12} : ScanWindow{1e-6, 1e2};
}

namespace {

constexpr double kProbeStretch = 1e3;
constexpr double kProbeLimit = 1e200;
constexpr int kStabilityPointsPerDecade = 200;

bool any_local_min(const std::vector<CriticalPoint>& points) {
  return std::any_of(points.begin(), points.end(),
                     [](const CriticalPoint& p) { return p.kind == CriticalKind::LocalMin; });
}

}  // namespace

StabilityVerdict classify_stability(const TrapSystem& system, const Interaction& interaction,
                                    double floor) {
  const Objective energy = make_objective(Functional::Harmonic, system, interaction);
  StabilityVerdict verdict;
  const bool unbounded = is_attractive_delta(interaction) && system.n >= 2;
  verdict.classification = unbounded ? Boundedness::UnboundedBelow : Boundedness::BoundedBelow;

  auto probe_at = [&](double w) {
    const double e = energy(w);
    return StabilityProbe{w, e, energy(w * 1.001) < e};
  };
  verdict.probe = probe_at(kStabilityProbeW * system.omega);
  if (unbounded) {
    StabilityProbe p = verdict.probe;
    while (p.energy >= floor && p.location * kProbeStretch < kProbeLimit)
      p = probe_at(p.location * kProbeStretch);
    if (p.energy < floor) verdict.witness = p;
  }

  const ScanWindow window = default_window(Functional::Harmonic);
  verdict.metastable = any_local_min(find_critical_points(
      energy, window.lo * system.omega, window.hi * system.omega, kStabilityPointsPerDecade));
  return verdict;
}

StabilityVerdict classify_stability_gaussian(const TrapSystem& system, double b,
                                             PrefactorVariant variant, double floor) {
  const Objective energy =
      make_objective(Functional::Gaussian, system, DeltaInteraction{b}, variant);
  StabilityVerdict verdict;
  const bool unbounded = b < 0.0 && pair_count(system, variant) > 0.0;
  verdict.classification = unbounded ? Boundedness::UnboundedBelow : Boundedness::BoundedBelow;

  const double length = 1.0 / std::sqrt(system.omega);
  auto probe_at = [&](double sigma) {
    const double e = energy(sigma);
    return StabilityProbe{sigma, e, energy(sigma / 1.001) < e};
  };
  verdict.probe = probe_at(kStabilityProbeSigma * length);
  if (unbounded) {
    StabilityProbe p = verdict.probe;
    while (p.energy >= floor && p.location / kProbeStretch > 1.0 / kProbeLimit)
      p = probe_at(p.location / kProbeStretch);
    if (p.energy < floor) verdict.witness = p;
  }

  const ScanWindow window = default_window(Functional::Gaussian);
  verdict.metastable = any_local_min(
      find_critical_points(energy, window.lo * length, window.hi * length, kStabilityPointsPerDecade));
  return verdict;
}

std::string CriticalNumberPolicy::describe() const {
  std::ostringstream out;
  out << "strict discrete local minimum (slope sign - to +) on a log grid, " << points_per_decade
      << " points/decade, window [" << window_lo << ", " << window_hi << "]";
  return out.str();
}

bool has_local_minimum(const Objective& objective, const CriticalNumberPolicy& policy) {
  const std::vector<double> grid = log_grid(policy.window_lo, policy.window_hi, policy.points_per_decade);
  std::vector<double> values(grid.size());
  objective.evaluate(grid, values);
  return has_discrete_minimum(values);
}

CriticalNumberResult critical_number(const Interaction& interaction, double omega,
                                     PrefactorVariant variant, Functional functional,
                                     std::int64_t n_lo, std::int64_t n_hi,
                                     const CriticalNumberPolicy& policy) {
  require(n_lo >= 1 && n_lo < n_hi, ErrorKind::BracketInvalid, "requires 1 <= n_lo < n_hi");
  require(policy.points_per_decade >= 50.0, ErrorKind::InvalidInput,
          "critical-number policy needs >= 50 points per decade");

  const double scale = functional == Functional::Harmonic ? omega : 1.0 / std::sqrt(omega);
  CriticalNumberPolicy scaled = policy;
  scaled.window_lo *= scale;
  scaled.window_hi *= scale;
  auto stable = [&](std::int64_t n) {
    return has_local_minimum(make_objective(functional, TrapSystem{n, omega}, interaction, variant),
                             scaled);
  };

  if (!stable(n_lo)) {
    fail(ErrorKind::BracketInvalid, "no local minimum at n_lo = " + std::to_string(n_lo));
  }
  if (stable(n_hi)) {
    fail(ErrorKind::BracketInvalid, "a local minimum still exists at n_hi = " + std::to_string(n_hi));
  }
  std::int64_t lo = n_lo, hi = n_hi;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (stable(mid) ? lo : hi) = mid;
  }
  return {lo, lo, hi, policy.describe()};
}

CriticalNumberResult critical_number_auto(const Interaction& interaction, double omega,
                                          PrefactorVariant variant, Functional functional,
                                          std::int64_t n_lo, const CriticalNumberPolicy& policy) {
  require(n_lo >= 1, ErrorKind::BracketInvalid, "requires n_lo >= 1");
  const double scale = functional == Functional::Harmonic ? omega : 1.0 / std::sqrt(omega);
  CriticalNumberPolicy scaled = policy;
  scaled.window_lo *= scale;
  scaled.window_hi *= scale;
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  std::int64_t n_hi = std::max<std::int64_t>(2, 2 * n_lo);
  while (has_local_minimum(make_objective(functional, TrapSystem{n_hi, omega}, interaction, variant), scaled)) {
    require(n_hi < kLimit, ErrorKind::NoConvergence,
            "a local minimum persists up to N = " + std::to_string(n_hi));
    n_hi *= 2;
  }
  return critical_number(interaction, omega, variant, functional, n_lo, n_hi, policy);
}

GaussianCriticalStrength critical_strength_gaussian() {
  const double s = std::pow(5.0, -0.25);
  return {s, 0.4 * s};
}

}  // namespace trapbound

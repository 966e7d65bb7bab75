#include "trapbound/landscape.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "trapbound/errors.hpp"
#include "trapbound/kernels.hpp"

namespace trapbound {

namespace {

std::string full_precision(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string fixed3(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view field, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  require(res.ec == std::errc() && res.ptr == field.data() + field.size(), ErrorKind::InvalidInput,
          "malformed number '" + std::string(field) + "' on CSV line " + std::to_string(line));
  return v;
}

std::ofstream open_for_write(const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorKind::Io, "cannot open '" + destination.string() + "' for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& destination) {
  out.flush();
  require(static_cast<bool>(out), ErrorKind::Io, "write to '" + destination.string() + "' failed");
}

PointObjective point_energy(const EnergyLandscape& landscape) {
  if (landscape.functional == Functional::Gaussian) {
    const double b = std::get<DeltaInteraction>(landscape.interaction).b;
    return [system = landscape.system, b, variant = landscape.variant](double s) {
      return gaussian_bound_k(s, system, b, variant).total;
    };
  }
  return [system = landscape.system, interaction = landscape.interaction](double w) {
    return harmonic_bound_ev(w, system, interaction).total;
  };
}

}  // namespace

std::string_view to_string(Parameter parameter) { return parameter == Parameter::Sigma ? "sigma" : "w"; }

EnergyLandscape scan(const TrapSystem& system, const Interaction& interaction, PrefactorVariant variant,
                     Functional functional, double lo, double hi, double points_per_decade) {
  // make_objective performs the functional/interaction/variant compatibility checks.
  (void)make_objective(functional, system, interaction, variant);

  EnergyLandscape landscape;
  landscape.parameter = functional == Functional::Gaussian ? Parameter::Sigma : Parameter::W;
  landscape.functional = functional;
  landscape.system = system;
  landscape.interaction = interaction;
  landscape.variant = variant;

  const std::vector<double> grid = log_grid(lo, hi, points_per_decade);
  const std::size_t n = grid.size();
  std::vector<double> total(n), kinetic(n), com(n), inter(n);
  const kernels::BreakdownColumns columns{total, kinetic, com, inter};
  if (functional == Functional::Gaussian)
    kernels::gaussian_bound(grid, system, std::get<DeltaInteraction>(interaction).b, variant, columns);
  else
    kernels::harmonic_bound(grid, system, interaction, columns);

  landscape.grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(total[i])) {
      std::ostringstream msg;
      msg << "non-finite energy at " << to_string(landscape.parameter) << " = " << grid[i];
      fail(ErrorKind::InvalidInput, msg.str());
    }
    landscape.grid.push_back({grid[i], EnergyBreakdown{total[i], kinetic[i], com[i], inter[i]}});
  }
  return landscape;
}

std::vector<CriticalPoint> critical_points(const EnergyLandscape& landscape) {
  std::vector<double> locations, totals;
  locations.reserve(landscape.grid.size());
  totals.reserve(landscape.grid.size());
  for (const auto& p : landscape.grid) {
    locations.push_back(p.location);
    totals.push_back(p.energy.total);
  }
  return critical_points_from_samples(point_energy(landscape), locations, totals);
}

BarrierReport barrier_report_from(std::span<const CriticalPoint> points,
                                  std::optional<double> well_depth) {
  const auto local = std::find_if(points.begin(), points.end(),
                                  [](const CriticalPoint& p) { return p.kind == CriticalKind::LocalMin; });
  require(local != points.end(), ErrorKind::NoMetastableState,
          "the landscape has no local minimum besides the global one");

  BarrierReport report;
  report.local_min = *local;
  const auto global = std::find_if(points.begin(), points.end(),
                                   [](const CriticalPoint& p) { return p.kind == CriticalKind::GlobalMin; });

  // The barrier is the highest maximum on the path from the metastable
  // minimum to the lower state: the global minimum, or the collapse edge.
  double lo = 0.0, hi = 0.0;
  if (global != points.end()) {
    report.global_min = *global;
    lo = std::min(local->location, global->location);
    hi = std::max(local->location, global->location);
  } else {
    const bool collapse_high = !points.empty() && points.back().kind == CriticalKind::BoundaryDecreasing &&
                               points.back().location > local->location;
    lo = collapse_high ? local->location : 0.0;
    hi = collapse_high ? points.back().location : local->location;
  }

  std::optional<CriticalPoint> top;
  for (const auto& p : points) {
    if (p.kind != CriticalKind::LocalMax || p.location <= lo || p.location >= hi) continue;
    if (!top || p.energy > top->energy) top = p;
  }
  require(top.has_value(), ErrorKind::NoMetastableState,
          "no barrier separates the local minimum from a lower state");
  report.barrier_top = *top;
  report.barrier_height = top->energy - local->energy;
  if (well_depth) report.depth_ratio = report.barrier_height / std::abs(*well_depth);
  return report;
}

BarrierReport barrier_report(const TrapSystem& system, const StepWell& well, PrefactorVariant variant,
                             double points_per_decade) {
  const ScanWindow window = default_window(Functional::Harmonic);
  const EnergyLandscape landscape = scan(system, Interaction{well}, variant, Functional::Harmonic,
                                         window.lo * system.omega, window.hi * system.omega,
                                         points_per_decade);
  const std::vector<CriticalPoint> points = critical_points(landscape);
  return barrier_report_from(points, well.v);
}

void export_csv(const EnergyLandscape& landscape, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& p : landscape.grid) {
    out << full_precision(p.location) << ',' << full_precision(p.energy.total) << ','
        << full_precision(p.energy.kinetic_trap) << ',' << full_precision(p.energy.com_correction) << ','
        << full_precision(p.energy.interaction) << '\n';
  }
}

void export_csv(const EnergyLandscape& landscape, const std::filesystem::path& destination) {
  std::ofstream out = open_for_write(destination);
  export_csv(landscape, out);
  finish_write(out, destination);
}

std::vector<LandscapePoint> parse_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == kCsvHeader, ErrorKind::InvalidInput,
          "missing or unexpected landscape CSV header");
  std::vector<LandscapePoint> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double fields[5];
    std::string_view rest = line;
    for (int k = 0; k < 5; ++k) {
      const auto comma = rest.find(',');
      require((k < 4) == (comma != std::string_view::npos), ErrorKind::InvalidInput,
              "expected 5 fields on CSV line " + std::to_string(line_no));
      fields[k] = parse_double(rest.substr(0, comma), line_no);
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    rows.push_back({fields[0], EnergyBreakdown{fields[1], fields[2], fields[3], fields[4]}});
  }
  return rows;
}

void render_svg(const EnergyLandscape& landscape, std::span<const CriticalPoint> points,
                std::ostream& out) {
  require(landscape.grid.size() >= 2, ErrorKind::InvalidInput, "an SVG plot needs at least 2 points");

  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 90, kRight = 20, kTop = 30, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double e_min = landscape.grid.front().energy.total, e_max = e_min;
  double abs_min = std::numeric_limits<double>::infinity(), abs_max = 0.0;
  for (const auto& p : landscape.grid) {
    const double e = p.energy.total;
    e_min = std::min(e_min, e);
    e_max = std::max(e_max, e);
    if (e != 0.0) {
      abs_min = std::min(abs_min, std::abs(e));
      abs_max = std::max(abs_max, std::abs(e));
    }
  }
  // Symmetric log (linear within 1 hbar Omega of zero) when the curve changes
  // sign or spans more than six decades.
  const bool symlog = (e_min < 0.0 && e_max > 0.0) || (abs_max > 0.0 && abs_max / abs_min > 1e6);
  auto ty = [symlog](double e) {
    return symlog ? std::copysign(std::log10(1.0 + std::abs(e)), e) : e;
  };

  const double x_lo = std::log10(landscape.grid.front().location);
  const double x_hi = std::log10(landscape.grid.back().location);
  double y_lo = ty(e_min), y_hi = ty(e_max);
  if (y_hi - y_lo <= 1e-12 * std::max(1.0, std::abs(y_hi))) {
    const double pad = std::max(0.5, 0.1 * std::abs(y_hi));
    y_lo -= pad;
    y_hi += pad;
  }
  auto px = [&](double loc) {
    return kLeft + plot_w * (std::log10(loc) - x_lo) / (x_hi - x_lo);
  };
  auto py = [&](double e) {
    const double y = std::clamp(ty(e), y_lo, y_hi);
    return kTop + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo));
  };

  const std::string param_label = landscape.parameter == Parameter::W ? "w / &#937;" : "&#963; / a_ho";
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << fixed3(plot_w) << "\" height=\""
      << fixed3(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int d = static_cast<int>(std::ceil(x_lo)); d <= static_cast<int>(std::floor(x_hi)); ++d) {
    const double x = kLeft + plot_w * (d - x_lo) / (x_hi - x_lo);
    out << "<line x1=\"" << fixed3(x) << "\" y1=\"" << fixed3(kTop + plot_h) << "\" x2=\"" << fixed3(x)
        << "\" y2=\"" << fixed3(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed3(x) << "\" y=\"" << fixed3(kTop + plot_h + 20)
        << "\" font-size=\"11\" text-anchor=\"middle\">1e" << d << "</text>\n";
  }
  for (double e : {e_min, e_max}) {
    out << "<text x=\"" << fixed3(kLeft - 6) << "\" y=\"" << fixed3(py(e) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << full_precision(e) << "</text>\n";
  }
  out << "<text x=\"" << fixed3(kLeft + plot_w / 2) << "\" y=\"" << fixed3(kHeight - 15)
      << "\" font-size=\"13\" text-anchor=\"middle\">" << param_label << "</text>\n";
  out << "<text x=\"15\" y=\"" << fixed3(kTop + plot_h / 2) << "\" font-size=\"13\" transform=\"rotate(-90 15 "
      << fixed3(kTop + plot_h / 2) << ")\" text-anchor=\"middle\">E / &#295;&#937;"
      << (symlog ? " (symlog)" : "") << "</text>\n";

  out << "<polyline class=\"landscape\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < landscape.grid.size(); ++i) {
    const auto& p = landscape.grid[i];
    out << (i ? " " : "") << fixed3(px(p.location)) << ',' << fixed3(py(p.energy.total));
  }
  out << "\"/>\n";

  for (const auto& cp : points) {
    const double loc = std::clamp(cp.location, landscape.grid.front().location, landscape.grid.back().location);
    const char* colour = cp.kind == CriticalKind::LocalMax ? "#d62728"
                         : cp.kind == CriticalKind::BoundaryDecreasing ? "#7f7f7f"
                                                                       : "#2ca02c";
    out << "<circle class=\"critical-point\" cx=\"" << fixed3(px(loc)) << "\" cy=\"" << fixed3(py(cp.energy))
        << "\" r=\"5\" fill=\"" << colour << "\"><title>" << to_string(cp.kind) << " at "
        << full_precision(cp.location) << ", E = " << full_precision(cp.energy) << "</title></circle>\n";
  }
  out << "</svg>\n";
}

void render_svg(const EnergyLandscape& landscape, std::span<const CriticalPoint> points,
                const std::filesystem::path& destination) {
  std::ofstream out = open_for_write(destination);
  render_svg(landscape, points, out);
  finish_write(out, destination);
}

}  // namespace trapbound

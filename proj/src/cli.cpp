#include "trapbound/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trapbound/kernels.hpp"
#include "trapbound/landscape.hpp"
#include "trapbound/optimize.hpp"
#include "trapbound/scenario.hpp"

namespace trapbound::cli {

namespace {

using nlohmann::json;

std::string num(double v, int digits = 10) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

struct Flags {
  std::string scenario;
  std::optional<std::int64_t> n;
  std::optional<double> omega_hz, mass_amu, b, v, r_bohr, a_angstrom, wmin, wmax;
  std::optional<std::string> interaction, variant, functional;
  double points_per_decade = 200.0;
  std::string out, svg, json_path;
  // critical-n
  std::optional<std::int64_t> n_lo, n_hi, target_n;
  std::string r_sweep;
};

void add_scenario_flags(CLI::App& sub, Flags& f) {
  sub.add_option("--scenario", f.scenario, "Built-in scenario (li7-hulet) or JSON scenario file");
  sub.add_option("--n", f.n, "Particle number N");
  sub.add_option("--omega-hz", f.omega_hz, "Trap frequency in Hz");
  sub.add_option("--mass-amu", f.mass_amu, "Particle mass in atomic mass units");
  sub.add_option("--interaction", f.interaction, "delta | step")->check(CLI::IsMember({"delta", "step"}));
  sub.add_option("--b", f.b, "Contact strength B in trap units");
  sub.add_option("--v", f.v, "Step-well depth |V| in units of hbar*Omega");
  sub.add_option("--r-bohr", f.r_bohr, "Step-well range R in Bohr radii");
  sub.add_option("--a-angstrom", f.a_angstrom, "Target scattering length in Angstrom");
  sub.add_option("--variant", f.variant, "paper | corrected")->check(CLI::IsMember({"paper", "corrected"}));
  sub.add_option("--functional", f.functional, "harmonic (E_v over w) | gaussian (K over sigma)")
      ->check(CLI::IsMember({"harmonic", "gaussian"}));
  sub.add_option("--json", f.json_path, "Write a JSON report to this file");
}

void add_grid_flags(CLI::App& sub, Flags& f) {
  sub.add_option("--wmin", f.wmin, "Lower end of the parameter window (w/Omega or sigma/a_ho)");
  sub.add_option("--wmax", f.wmax, "Upper end of the parameter window");
  sub.add_option("--points-per-decade", f.points_per_decade, "Log-grid density");
}

Scenario assemble(const Flags& f) {
  Scenario s;
  if (!f.scenario.empty()) {
    if (auto builtin = builtin_scenario(f.scenario))
      s = *builtin;
    else
      s = load_scenario(f.scenario);
  }
  if (f.n) s.n = *f.n;
  if (f.omega_hz) s.frequency_hz = *f.omega_hz;
  if (f.mass_amu) s.mass_amu = *f.mass_amu;
  if (f.variant) s.variant = *parse_variant(*f.variant);
  if (f.functional) s.functional = *parse_functional(*f.functional);

  const bool overridden = f.interaction || f.b || f.v || f.a_angstrom || f.r_bohr;
  if (!overridden) return s;

  const std::string style = f.interaction ? *f.interaction : (f.b ? "delta" : "step");
  if (style == "delta") {
    require(!f.v && !f.a_angstrom && !f.r_bohr, ErrorKind::InvalidInput,
            "--v, --a-angstrom and --r-bohr do not apply to a delta interaction");
    std::optional<double> b = f.b;
    if (!b && s.interaction)
      if (const auto* d = std::get_if<DeltaSpec>(&*s.interaction)) b = d->b;
    require(b.has_value(), ErrorKind::InvalidInput, "a delta interaction needs --b");
    s.interaction = DeltaSpec{*b};
    return s;
  }

  require(!f.b, ErrorKind::InvalidInput, "--b does not apply to a step interaction");
  require(!(f.v && f.a_angstrom), ErrorKind::InvalidInput, "give either --v or --a-angstrom, not both");
  std::optional<double> r = f.r_bohr, v = f.v, a = f.a_angstrom;
  if (s.interaction) {
    if (const auto* d = std::get_if<StepDepthSpec>(&*s.interaction)) {
      if (!r) r = d->r_bohr;
      if (!v && !a) v = d->v;
    } else if (const auto* c = std::get_if<StepScatteringSpec>(&*s.interaction)) {
      if (!r) r = c->r_bohr;
      if (!v && !a) a = c->a_angstrom;
    }
  }
  require(r.has_value(), ErrorKind::InvalidInput, "a step interaction needs --r-bohr");
  require(v.has_value() || a.has_value(), ErrorKind::InvalidInput,
          "a step interaction needs --v or --a-angstrom");
  if (v)
    s.interaction = StepDepthSpec{*v, *r};
  else
    s.interaction = StepScatteringSpec{*a, *r};
  return s;
}

json interaction_json(const ResolvedScenario& r) {
  json j;
  if (const auto* d = std::get_if<DeltaInteraction>(&r.interaction)) {
    j["type"] = "delta";
    j["b"] = d->b;
  } else {
    const auto& w = std::get<StepWell>(r.interaction);
    j["type"] = "step";
    j["v"] = w.v;
    j["r"] = w.r;
  }
  if (r.calibration) {
    j["calibration"] = {{"x", r.calibration->x},
                        {"a_achieved", r.calibration->a_achieved},
                        {"residual", r.calibration->residual},
                        {"iterations", r.calibration->iterations}};
  }
  return j;
}

json points_json(const std::vector<CriticalPoint>& points) {
  json arr = json::array();
  for (const auto& p : points) {
    const char* curvature = p.curvature == CurvatureSign::Positive   ? "+"
                            : p.curvature == CurvatureSign::Negative ? "-"
                                                                     : "0";
    arr.push_back({{"kind", std::string(to_string(p.kind))},
                   {"location", p.location},
                   {"energy", p.energy},
                   {"curvature", curvature}});
  }
  return arr;
}

json report_base(const char* command, const ResolvedScenario& r) {
  json j;
  j["command"] = command;
  j["scenario"] = json::parse(scenario_to_json(r.scenario));
  j["n"] = r.system.n;
  j["interaction"] = interaction_json(r);
  j["kernel"] = std::string(kernels::to_string(kernels::active_isa()));
  return j;
}

void write_json(const std::string& path, const json& report) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << report.dump(2) << '\n';
  out.flush();
  require(static_cast<bool>(out), ErrorKind::Io, "write to '" + path + "' failed");
}

void print_header(std::ostream& out, const ResolvedScenario& r) {
  const auto& s = r.scenario;
  out << "scenario     " << s.name << '\n';
  out << "functional   " << to_string(s.functional)
      << (s.functional == Functional::Harmonic ? " (E_v over w/Omega)" : " (K over sigma/a_ho)") << '\n';
  out << "N            " << r.system.n << '\n';
  out << "variant      " << to_string(s.variant) << '\n';
  if (const auto* d = std::get_if<DeltaInteraction>(&r.interaction)) {
    out << "interaction  delta, B = " << num(d->b) << " (trap units)\n";
  } else {
    const auto& w = std::get<StepWell>(r.interaction);
    out << "interaction  step well, V = " << num(w.v) << " hbar*Omega, R = " << num(w.r) << " a_ho\n";
  }
  if (r.calibration) {
    out << "calibration  x = k0 R = " << num(r.calibration->x) << ", residual " << num(r.calibration->residual, 3)
        << " after " << r.calibration->iterations << " iterations\n";
  }
  out << "trap         " << num(s.frequency_hz) << " Hz, " << num(s.mass_amu) << " amu, a_ho = "
      << num(r.context.a_ho_si()) << " m, hbar*Omega = " << num(r.context.energy_quantum_si()) << " J\n";
}

void print_points(std::ostream& out, const std::vector<CriticalPoint>& points, Parameter parameter) {
  out << "critical points (" << points.size() << "):\n";
  out << "  " << std::left << std::setw(22) << "kind" << std::setw(26) << to_string(parameter) << "energy\n";
  for (const auto& p : points) {
    out << "  " << std::setw(22) << to_string(p.kind) << std::setw(26) << num(p.location, 12)
        << num(p.energy, 12) << '\n';
  }
  out << std::right;
}

std::optional<double> flat_value(const EnergyLandscape& landscape) {
  double lo = landscape.grid.front().energy.total, hi = lo;
  for (const auto& p : landscape.grid) {
    lo = std::min(lo, p.energy.total);
    hi = std::max(hi, p.energy.total);
  }
  if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) return landscape.grid.front().energy.total;
  return std::nullopt;
}

ResolvedScenario resolve_with_n(const Scenario& s) {
  require(s.n.has_value(), ErrorKind::InvalidInput, "particle number required (--n)");
  return resolve(s);
}

std::pair<double, double> window_for(const Flags& f, const ResolvedScenario& r) {
  const ScanWindow window = default_window(r.scenario.functional);
  const double omega = r.system.omega;
  const double scale = r.scenario.functional == Functional::Harmonic ? omega : 1.0 / std::sqrt(omega);
  return {f.wmin.value_or(window.lo * scale), f.wmax.value_or(window.hi * scale)};
}

int cmd_scan(const Flags& f, std::ostream& out) {
  const ResolvedScenario r = resolve_with_n(assemble(f));
  const auto [lo, hi] = window_for(f, r);
  const EnergyLandscape landscape =
      scan(r.system, r.interaction, r.scenario.variant, r.scenario.functional, lo, hi, f.points_per_decade);
  const std::vector<CriticalPoint> points = critical_points(landscape);

  print_header(out, r);
  out << "grid         " << landscape.grid.size() << " points, " << to_string(landscape.parameter) << " in ["
      << num(lo) << ", " << num(hi) << "], " << num(f.points_per_decade) << "/decade, kernel "
      << kernels::to_string(kernels::active_isa()) << '\n';
  const auto flat = flat_value(landscape);
  if (points.empty() && flat) {
    out << "landscape is flat: E = " << num(*flat) << " hbar*Omega at every grid point\n";
  } else {
    print_points(out, points, landscape.parameter);
  }

  if (!f.out.empty()) {
    export_csv(landscape, std::filesystem::path(f.out));
    out << "wrote " << f.out << '\n';
  }
  if (!f.svg.empty()) {
    render_svg(landscape, points, std::filesystem::path(f.svg));
    out << "wrote " << f.svg << '\n';
  }

  json report = report_base("scan", r);
  report["grid"] = {{"lo", lo}, {"hi", hi}, {"points_per_decade", f.points_per_decade},
                    {"points", landscape.grid.size()}};
  report["critical_points"] = points_json(points);
  report["flat"] = points.empty() && flat.has_value();
  write_json(f.json_path, report);
  return kOk;
}

int cmd_minimize(const Flags& f, std::ostream& out) {
  const ResolvedScenario r = resolve_with_n(assemble(f));
  const bool harmonic = r.scenario.functional == Functional::Harmonic;
  const StabilityVerdict verdict =
      harmonic ? classify_stability(r.system, r.interaction)
               : classify_stability_gaussian(r.system, std::get<DeltaInteraction>(r.interaction).b,
                                             r.scenario.variant);
  print_header(out, r);
  const std::string param = harmonic ? "w" : "sigma";
  json report = report_base("minimize", r);
  report["bounded_below"] = verdict.classification == Boundedness::BoundedBelow;
  report["metastable"] = verdict.metastable;

  if (verdict.classification == Boundedness::UnboundedBelow) {
    out << "stability    UNBOUNDED BELOW: the energy collapses, E -> -infinity as " << param
        << (harmonic ? " -> infinity" : " -> 0") << '\n';
    if (verdict.witness) {
      out << "witness      E(" << param << " = " << num(verdict.witness->location) << ") = "
          << num(verdict.witness->energy) << " hbar*Omega\n";
      report["witness"] = {{"location", verdict.witness->location}, {"energy", verdict.witness->energy}};
    }
    out << "metastable   " << (verdict.metastable ? "yes (local minimum before the collapse)" : "no") << '\n';
    write_json(f.json_path, report);
    return kUnboundedBelow;
  }

  const auto [lo, hi] = window_for(f, r);
  const EnergyLandscape landscape =
      scan(r.system, r.interaction, r.scenario.variant, r.scenario.functional, lo, hi, f.points_per_decade);
  const std::vector<CriticalPoint> points = critical_points(landscape);
  out << "stability    bounded below\n";
  out << "metastable   " << (verdict.metastable ? "yes" : "no") << '\n';

  std::vector<CriticalPoint> minima;
  std::copy_if(points.begin(), points.end(), std::back_inserter(minima),
               [](const CriticalPoint& p) { return p.is_minimum(); });
  if (minima.empty()) {
    const auto flat = flat_value(landscape);
    if (!flat) {
      fail(ErrorKind::NoInteriorMinimum, "no interior minimum of the energy in [" + num(lo) + ", " + num(hi) + "]");
    }
    out << "minimum      flat landscape, E = " << num(*flat) << " hbar*Omega for every " << param << '\n';
    report["flat"] = true;
    report["energy"] = *flat;
    write_json(f.json_path, report);
    return kOk;
  }
  for (const auto& m : minima) {
    out << std::left << std::setw(13) << to_string(m.kind) << std::right << param << " = " << num(m.location, 12)
        << ", E = " << num(m.energy, 12) << " hbar*Omega\n";
  }
  report["flat"] = false;
  report["minima"] = points_json(minima);
  write_json(f.json_path, report);
  return kOk;
}

struct SweepSpec {
  double lo = 0.0, hi = 0.0;
  int steps = 1;
};

SweepSpec parse_sweep(const std::string& text) {
  SweepSpec s;
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  require(second != std::string::npos, ErrorKind::InvalidInput, "--r-sweep expects lo:hi:steps");
  try {
    std::size_t used = 0;
    s.lo = std::stod(text.substr(0, first), &used);
    s.hi = std::stod(text.substr(first + 1, second - first - 1));
    s.steps = std::stoi(text.substr(second + 1));
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "--r-sweep expects lo:hi:steps, got '" + text + "'");
  }
  require(s.lo > 0.0 && s.hi >= s.lo && s.steps >= 1, ErrorKind::InvalidInput,
          "--r-sweep needs 0 < lo <= hi and steps >= 1");
  require(s.steps == 1 || s.hi > s.lo, ErrorKind::InvalidInput, "--r-sweep with several steps needs lo < hi");
  return s;
}

CriticalNumberResult solve_critical(const ResolvedScenario& r, const Flags& f) {
  // E_v is flat at N = 1, so the harmonic bracket starts at the first pair.
  const std::int64_t n_lo = f.n_lo.value_or(r.scenario.functional == Functional::Harmonic ? 2 : 1);
  if (f.n_hi)
    return critical_number(r.interaction, r.system.omega, r.scenario.variant, r.scenario.functional, n_lo,
                           *f.n_hi);
  return critical_number_auto(r.interaction, r.system.omega, r.scenario.variant, r.scenario.functional, n_lo);
}

int cmd_critical_n(const Flags& f, std::ostream& out) {
  const Scenario base = assemble(f);
  json report;
  report["command"] = "critical-n";
  report["scenario"] = json::parse(scenario_to_json(base));

  if (f.r_sweep.empty()) {
    const ResolvedScenario r = resolve(base);
    const CriticalNumberResult c = solve_critical(r, f);
    print_header(out, r);
    out << "N_max        " << c.n_max << "  (local minimum at N = " << c.last_stable << ", none at N = "
        << c.first_unstable << ")\n";
    out << "criterion    " << c.criterion << '\n';
    report["interaction"] = interaction_json(r);
    report["n_max"] = c.n_max;
    report["bracket"] = {c.last_stable, c.first_unstable};
    report["criterion"] = c.criterion;
    write_json(f.json_path, report);
    return kOk;
  }

  require(base.interaction && std::holds_alternative<StepScatteringSpec>(*base.interaction),
          ErrorKind::InvalidInput, "--r-sweep needs a step well calibrated from --a-angstrom");
  const SweepSpec sweep = parse_sweep(f.r_sweep);
  const double a_angstrom = std::get<StepScatteringSpec>(*base.interaction).a_angstrom;

  out << "scenario     " << base.name << " (R sweep, exploratory)\n";
  out << "target a     " << num(a_angstrom) << " A at " << num(base.frequency_hz) << " Hz, " << num(base.mass_amu)
      << " amu\n";
  out << "  " << std::left << std::setw(12) << "R/a0" << std::setw(20) << "V/hbarOmega" << std::setw(16) << "x"
      << "N_max\n";
  json rows = json::array();
  std::string criterion;
  struct Row {
    double r_bohr;
    std::int64_t n_max;
  };
  std::vector<Row> table;
  for (int i = 0; i < sweep.steps; ++i) {
    const double r_bohr =
        sweep.steps == 1 ? sweep.lo : sweep.lo + (sweep.hi - sweep.lo) * i / static_cast<double>(sweep.steps - 1);
    Scenario s = base;
    s.interaction = StepScatteringSpec{a_angstrom, r_bohr};
    const ResolvedScenario r = resolve(s);
    const CriticalNumberResult c = solve_critical(r, f);
    criterion = c.criterion;
    const auto& well = std::get<StepWell>(r.interaction);
    out << "  " << std::setw(12) << num(r_bohr) << std::setw(20) << num(well.v) << std::setw(16)
        << num(r.calibration->x) << c.n_max << '\n';
    rows.push_back({{"r_bohr", r_bohr}, {"v", well.v}, {"x", r.calibration->x}, {"n_max", c.n_max},
                    {"bracket", {c.last_stable, c.first_unstable}}});
    table.push_back({r_bohr, c.n_max});
  }
  out << std::right;
  out << "criterion    " << criterion << '\n';
  report["rows"] = rows;
  report["criterion"] = criterion;
  report["exploratory"] = true;

  if (f.target_n) {
    const double target = static_cast<double>(*f.target_n);
    const auto nearest = std::min_element(table.begin(), table.end(), [target](const Row& a, const Row& b) {
      return std::abs(a.n_max - target) < std::abs(b.n_max - target);
    });
    const double deviation = (static_cast<double>(nearest->n_max) - target) / target;
    const bool within = std::abs(deviation) <= 0.05;
    out << "target N     " << *f.target_n << ": closest R = " << num(nearest->r_bohr) << " a0 (N_max = "
        << nearest->n_max << ", " << (deviation >= 0 ? "+" : "") << num(100.0 * deviation, 4) << "%); "
        << (within ? "reproduced within 5%" : "no R in the sweep reproduces it within 5%") << '\n';
    report["target"] = {{"n", *f.target_n}, {"closest_r_bohr", nearest->r_bohr},
                        {"closest_n_max", nearest->n_max}, {"relative_deviation", deviation},
                        {"within_5_percent", within}};
  }
  write_json(f.json_path, report);
  return kOk;
}

int cmd_calibrate(const Flags& f, std::ostream& out) {
  const Scenario s = assemble(f);
  require(s.interaction && std::holds_alternative<StepScatteringSpec>(*s.interaction), ErrorKind::InvalidInput,
          "calibrate needs --a-angstrom and --r-bohr (or a scenario that sets them)");
  const auto spec = std::get<StepScatteringSpec>(*s.interaction);
  const units::UnitContext ctx = units::make_context(s.frequency_hz, s.mass_amu);
  const double a = units::length_to_trap(units::angstrom_to_m(spec.a_angstrom), ctx);
  const double r = units::length_to_trap(units::bohr_to_m(spec.r_bohr), ctx);
  const CalibrationResult c = calibrate_depth(a, r);

  out << "scenario     " << s.name << '\n';
  out << "trap         " << num(s.frequency_hz) << " Hz, " << num(s.mass_amu) << " amu, a_ho = " << num(ctx.a_ho_si())
      << " m, hbar*Omega = " << num(ctx.energy_quantum_si()) << " J\n";
  out << "target       a = " << num(spec.a_angstrom) << " A = " << num(a, 17) << " a_ho, R = " << num(spec.r_bohr)
      << " a0 = " << num(r, 17) << " a_ho\n";
  out << "V            " << num(c.v, 17) << " hbar*Omega = " << num(c.v * ctx.energy_quantum_si(), 17) << " J\n";
  out << "x = k0 R     " << num(c.x, 17) << " (pi/2 - x = " << num(1.5707963267948966 - c.x, 6) << ")\n";
  out << "a achieved   " << num(c.a_achieved, 17) << " a_ho = "
      << num(c.a_achieved * ctx.a_ho_si() / units::kAngstrom, 12) << " A\n";
  out << "residual     " << num(c.residual, 3) << " after " << c.iterations << " iterations\n";

  json report;
  report["command"] = "calibrate";
  report["scenario"] = json::parse(scenario_to_json(s));
  report["a_trap"] = a;
  report["r_trap"] = r;
  report["v"] = c.v;
  report["v_joule"] = c.v * ctx.energy_quantum_si();
  report["x"] = c.x;
  report["a_achieved"] = c.a_achieved;
  report["residual"] = c.residual;
  report["iterations"] = c.iterations;
  write_json(f.json_path, report);
  return kOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Resonance:
    case ErrorKind::UnreachableBranch:
    case ErrorKind::BracketInvalid:
      return kInvalidInput;
    case ErrorKind::NoConvergence:
    case ErrorKind::NoInteriorMinimum:
    case ErrorKind::NoMetastableState:
      return kNoConvergence;
    case ErrorKind::Io:
      return kFailure;
  }
  return kFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational energy bounds for attractive bosons in a harmonic trap"};
  app.name("trapbound");
  app.require_subcommand(1);
  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "Kernel variant: auto | scalar | avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  Flags f;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Sample the energy landscape and list its critical points");
  add_scenario_flags(*scan_cmd, f);
  add_grid_flags(*scan_cmd, f);
  scan_cmd->add_option("--out", f.out, "CSV output file");
  scan_cmd->add_option("--svg", f.svg, "SVG plot output file");

  CLI::App* min_cmd = app.add_subcommand("minimize", "Classify stability and report the minima");
  add_scenario_flags(*min_cmd, f);
  add_grid_flags(*min_cmd, f);

  CLI::App* crit_cmd = app.add_subcommand("critical-n", "Largest N with a trap-scale local minimum");
  add_scenario_flags(*crit_cmd, f);
  crit_cmd->add_option("--n-lo", f.n_lo, "Lower end of the N bracket (default 2 for harmonic, 1 for gaussian)");
  crit_cmd->add_option("--n-hi", f.n_hi, "Upper end of the N bracket (default: doubled until unstable)");
  crit_cmd->add_option("--r-sweep", f.r_sweep, "Sweep R over lo:hi:steps Bohr radii");
  crit_cmd->add_option("--target-n", f.target_n, "Report the swept R whose N_max is closest to this value");

  CLI::App* cal_cmd = app.add_subcommand("calibrate", "Step-well depth reproducing a scattering length");
  add_scenario_flags(*cal_cmd, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    kernels::set_isa_override(kernel == "auto" ? std::nullopt : kernels::parse_isa(kernel));
    int code = kOk;
    if (scan_cmd->parsed()) code = cmd_scan(f, out);
    else if (min_cmd->parsed()) code = cmd_minimize(f, out);
    else if (crit_cmd->parsed()) code = cmd_critical_n(f, out);
    else if (cal_cmd->parsed()) code = cmd_calibrate(f, out);
    kernels::set_isa_override(std::nullopt);
    return code;
  } catch (const Error& e) {
    kernels::set_isa_override(std::nullopt);
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::UnreachableBranch)
      err << "hint: only negative scattering lengths are reachable by a well without a bound state\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    kernels::set_isa_override(std::nullopt);
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace trapbound::cli

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "trapbound/errors.hpp"
#include "trapbound/landscape.hpp"
#include "trapbound/scattering.hpp"
#include "trapbound/units.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace trapbound;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

StepWell li7_well() {
  const auto ctx = units::make_context(145.0, 7.016);
  const double a = units::length_to_trap(units::angstrom_to_m(-14.5), ctx);
  const double r = units::length_to_trap(units::bohr_to_m(2.0), ctx);
  return {calibrate_depth(a, r).v, r};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path tmp_path(const std::string& name) {
  return std::filesystem::path(TRAPBOUND_TEST_TMPDIR) / name;
}

}  // namespace

TEST_CASE("scan examples", "[landscape]") {
  for (const Interaction& i : {Interaction{DeltaInteraction{-1.0}}, Interaction{StepWell{3.0, 0.5}}}) {
    const auto l = scan({1, 1.0}, i, PrefactorVariant::CorrectedPairCount, 1e-3, 1e3, 10.0);
    CHECK(l.grid.size() == 61);
    for (const auto& p : l.grid) CHECK_THAT(p.energy.total, WithinAbs(1.5, 1e-12));
  }
  const auto collapse = scan({2, 1.0}, DeltaInteraction{-1.0}, PrefactorVariant::CorrectedPairCount, 1e3, 1e12, 20.0);
  for (std::size_t i = 1; i < collapse.grid.size(); ++i)
    CHECK(collapse.grid[i].energy.total < collapse.grid[i - 1].energy.total);

  const auto l = scan({3, 1.0}, DeltaInteraction{-0.5}, PrefactorVariant::CorrectedPairCount, 1.0, 1e3, 100.0);
  REQUIRE(l.grid.size() == 301);
  CHECK(l.parameter == Parameter::W);
  for (std::size_t i = 1; i < l.grid.size(); ++i) CHECK(l.grid[i].location > l.grid[i - 1].location);

  const auto k = scan({3, 1.0}, DeltaInteraction{-0.5}, PrefactorVariant::PaperNSquared, Functional::Gaussian, 0.1, 10.0, 50.0);
  CHECK(k.parameter == Parameter::Sigma);
  CHECK(k.functional == Functional::Gaussian);
  CHECK_THAT(k.grid[50].energy.total, WithinRel(gaussian_bound_k(1.0, {3, 1.0}, -0.5, PrefactorVariant::PaperNSquared).total, 1e-13));
}

TEST_CASE("scan rejects bad windows", "[landscape]") {
  CHECK(kind_of([] { (void)scan({2, 1.0}, DeltaInteraction{-1.0}, PrefactorVariant::CorrectedPairCount, 0.0, 1.0, 10.0); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { (void)scan({2, 1.0}, DeltaInteraction{-1.0}, PrefactorVariant::CorrectedPairCount, 1.0, 10.0, 0.5); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("landscape breakdowns satisfy the component sum", "[landscape][property]") {
  const auto l = scan({1000, 1.0}, li7_well(), PrefactorVariant::CorrectedPairCount, 1e-3, 1e12, 50.0);
  for (const auto& p : l.grid) CHECK(std::abs(p.energy.total - p.energy.component_sum()) <= 1e-14 * p.energy.component_scale());
}

TEST_CASE("barrier_report for 7Li at N = 1000", "[landscape]") {
  const StepWell well = li7_well();
  const auto r = barrier_report({1000, 1.0}, well);
  CHECK(r.local_min.kind == CriticalKind::LocalMin);
  CHECK(r.barrier_top.kind == CriticalKind::LocalMax);
  REQUIRE(r.global_min.has_value());
  CHECK(r.local_min.location < r.barrier_top.location);
  CHECK(r.barrier_top.location < r.global_min->location);
  CHECK(r.barrier_height >= 0.0);
  // 40-digit stationary points of the same landscape
  CHECK_THAT(r.barrier_height, WithinRel(577148.63969794868 - 1489.5269380349338, 1e-9));
  REQUIRE(r.depth_ratio.has_value());
  CHECK_THAT(*r.depth_ratio, WithinRel((577148.63969794868 - 1489.5269380349338) / 2066246647.7678218, 1e-8));

  // The report reuses the critical points of the same scan.
  const auto l = scan({1000, 1.0}, well, PrefactorVariant::CorrectedPairCount, 1e-3, 1e12, 200.0);
  const auto pts = critical_points(l);
  CHECK(r.local_min.location == pts[0].location);
  CHECK(r.barrier_top.location == pts[1].location);
  CHECK(r.global_min->location == pts[2].location);
}

TEST_CASE("barrier_report for a weak well", "[landscape]") {
  CHECK(kind_of([] { (void)barrier_report({2, 1.0}, StepWell{0.1, 0.1}); }) == ErrorKind::NoMetastableState);
}

TEST_CASE("barrier_report_from uses the collapse edge", "[landscape]") {
  const std::vector<CriticalPoint> pts{{1.07, 2.93, CriticalKind::LocalMin, CurvatureSign::Positive},
                                       {62.0, 17.0, CriticalKind::LocalMax, CurvatureSign::Negative},
                                       {1e12, -1e15, CriticalKind::BoundaryDecreasing, CurvatureSign::Zero}};
  const auto r = barrier_report_from(pts);
  CHECK_FALSE(r.global_min.has_value());
  CHECK_FALSE(r.depth_ratio.has_value());
  CHECK_THAT(r.barrier_height, WithinRel(17.0 - 2.93, 1e-15));
}

TEST_CASE("barrier height is invariant under an energy shift", "[landscape][property]") {
  const StepWell well = li7_well();
  const TrapSystem sys{1000, 1.0};
  std::mt19937_64 rng(0x5eed40);
  std::uniform_real_distribution<double> shift(-1e5, 1e5);
  const Objective base = make_objective(Functional::Harmonic, sys, well);
  const double reference = barrier_report_from(find_critical_points(base, 1e-3, 1e12, 200.0)).barrier_height;
  for (int i = 0; i < 5; ++i) {
    const double c = shift(rng);
    const Objective shifted([&base, c](double w) { return base(w) + c; });
    const auto r = barrier_report_from(find_critical_points(shifted, 1e-3, 1e12, 200.0));
    CHECK_THAT(r.barrier_height, WithinRel(reference, 1e-9));
  }
  // Exact shift of already-found points.
  auto pts = find_critical_points(base, 1e-3, 1e12, 200.0);
  for (auto& p : pts) p.energy += 1024.0;
  CHECK_THAT(barrier_report_from(pts).barrier_height, WithinRel(reference, 1e-12));
}

TEST_CASE("CSV export", "[landscape]") {
  const auto three = scan({2, 1.0}, DeltaInteraction{-1.0}, PrefactorVariant::CorrectedPairCount, 1.0, 100.0, 1.0);
  REQUIRE(three.grid.size() == 3);
  std::ostringstream out;
  export_csv(three, out);
  const std::string text = out.str();
  CHECK(count_of(text, "\n") == 4);
  CHECK(text.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);

  const auto flat = scan({1, 1.0}, StepWell{2.0, 0.3}, PrefactorVariant::CorrectedPairCount, 1e-3, 1e3, 10.0);
  std::ostringstream flat_out;
  export_csv(flat, flat_out);
  std::istringstream in(flat_out.str());
  for (const auto& p : parse_csv(in)) CHECK_THAT(p.energy.total, WithinAbs(1.5, 1e-12));
}

TEST_CASE("CSV round trip is bit-identical", "[landscape][property]") {
  std::mt19937_64 rng(0x5eed41);
  std::uniform_real_distribution<double> log_v(0.0, 9.0), log_r(-5.0, 0.0);
  for (int i = 0; i < 5; ++i) {
    const auto l = scan({std::int64_t{2} + i * 100, 1.0}, StepWell{std::pow(10.0, log_v(rng)), std::pow(10.0, log_r(rng))},
                        PrefactorVariant::CorrectedPairCount, 1e-3, 1e12, 37.0);
    std::ostringstream out;
    export_csv(l, out);
    std::istringstream in(out.str());
    const auto back = parse_csv(in);
    REQUIRE(back.size() == l.grid.size());
    for (std::size_t j = 0; j < back.size(); ++j) {
      CHECK(back[j].location == l.grid[j].location);
      CHECK(back[j].energy.total == l.grid[j].energy.total);
      CHECK(back[j].energy.kinetic_trap == l.grid[j].energy.kinetic_trap);
      CHECK(back[j].energy.com_correction == l.grid[j].energy.com_correction);
      CHECK(back[j].energy.interaction == l.grid[j].energy.interaction);
    }
  }
}

TEST_CASE("CSV file export and parse errors", "[landscape]") {
  const auto l = scan({2, 1.0}, DeltaInteraction{-1.0}, PrefactorVariant::CorrectedPairCount, 1.0, 10.0, 5.0);
  const auto path = tmp_path("landscape_test.csv");
  export_csv(l, path);
  std::ifstream in(path);
  CHECK(parse_csv(in).size() == l.grid.size());

  CHECK(kind_of([&] { export_csv(l, std::filesystem::path("/nonexistent-dir/x.csv")); }) == ErrorKind::Io);
  std::istringstream bad_header("w,total\n1,2\n");
  CHECK(kind_of([&] { (void)parse_csv(bad_header); }) == ErrorKind::InvalidInput);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
  CHECK(kind_of([&] { (void)parse_csv(short_row); }) == ErrorKind::InvalidInput);
}

TEST_CASE("SVG rendering", "[landscape]") {
  const auto flat = scan({1, 1.0}, DeltaInteraction{-1.0}, PrefactorVariant::CorrectedPairCount, 1e-3, 1e3, 10.0);
  std::ostringstream flat_svg;
  render_svg(flat, {}, flat_svg);
  const std::string f = flat_svg.str();
  CHECK(std::regex_search(f, std::regex(R"(^(<\?xml[^>]*\?>\s*)?<svg[\s>])")));
  CHECK(count_of(f, "class=\"landscape\"") == 1);
  CHECK(count_of(f, "class=\"critical-point\"") == 0);
  // horizontal: every polyline vertex shares one ordinate
  std::smatch m;
  REQUIRE(std::regex_search(f, m, std::regex(R"(points=\"([^\"]*)\")")));
  std::istringstream pts(m[1].str());
  std::string pair;
  std::set<std::string> ys;
  while (pts >> pair) ys.insert(pair.substr(pair.find(',') + 1));
  CHECK(ys.size() == 1);

  const StepWell well = li7_well();
  const auto l = scan({1000, 1.0}, well, PrefactorVariant::CorrectedPairCount, 1e-3, 1e12, 50.0);
  const auto cps = critical_points(l);
  std::ostringstream svg;
  render_svg(l, cps, svg);
  CHECK(count_of(svg.str(), "class=\"critical-point\"") == cps.size());
  CHECK(svg.str().find("</svg>") != std::string::npos);

  const auto tiny = scan({2, 1.0}, DeltaInteraction{-1.0}, PrefactorVariant::CorrectedPairCount, 1.0, 2.0, 1.0);
  CHECK(tiny.grid.size() == 2);
  CHECK_NOTHROW(render_svg(tiny, {}, svg));
}

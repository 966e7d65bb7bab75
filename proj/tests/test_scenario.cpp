#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "trapbound/errors.hpp"
#include "trapbound/scenario.hpp"

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

}  // namespace

TEST_CASE("built-in li7-hulet scenario", "[scenario]") {
  const auto s = builtin_scenario("li7-hulet");
  REQUIRE(s.has_value());
  CHECK(s->mass_amu == 7.016);
  CHECK(s->frequency_hz == 145.0);
  CHECK(s->variant == PrefactorVariant::CorrectedPairCount);
  REQUIRE(s->interaction.has_value());
  const auto& spec = std::get<StepScatteringSpec>(*s->interaction);
  CHECK(spec.a_angstrom == -14.5);
  CHECK(spec.r_bohr == 2.0);
  CHECK_FALSE(builtin_scenario("rb87").has_value());

  const auto r = resolve(*s);
  REQUIRE(r.calibration.has_value());
  REQUIRE(r.range_trap.has_value());
  CHECK_THAT(*r.range_trap, WithinRel(3.357656949942097e-05, 1e-13));
  CHECK_THAT(std::get<StepWell>(r.interaction).v, WithinRel(2066246647.7678218, 1e-10));
}

TEST_CASE("scenario JSON parsing", "[scenario]") {
  const auto s = parse_scenario_json(R"({"name": "weak", "n": 12, "interaction": "delta", "b": -0.25,
                                        "functional": "gaussian", "variant": "paper"})");
  CHECK(s.name == "weak");
  CHECK(s.n == 12);
  CHECK(s.functional == Functional::Gaussian);
  CHECK(s.variant == PrefactorVariant::PaperNSquared);
  CHECK(std::get<DeltaSpec>(*s.interaction).b == -0.25);

  const auto step = parse_scenario_json(R"({"interaction": "step", "v": 1e8, "r_bohr": 3})");
  const auto r = resolve(step);
  CHECK(std::get<StepWell>(r.interaction).v == 1e8);
  CHECK_FALSE(r.calibration.has_value());
}

TEST_CASE("scenario JSON rejects malformed input", "[scenario]") {
  for (const char* text : {
           R"({"nme": "typo"})",
           R"({"interaction": "step", "v": 1, "a_angstrom": -3, "r_bohr": 2})",
           R"({"interaction": "delta", "b": -1, "r_bohr": 2})",
           R"({"interaction": "step", "v": 1})",
           R"({"interaction": "square", "v": 1, "r_bohr": 1})",
           R"({"b": -1})",
           R"({"n": 2.5})",
           R"({"variant": "n2"})",
           R"([1, 2])",
           R"({"name": )",
       }) {
    INFO(text);
    CHECK(kind_of([&] { (void)parse_scenario_json(text); }) == ErrorKind::InvalidInput);
  }
  CHECK(kind_of([] { (void)resolve(Scenario{}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { (void)load_scenario("/nonexistent/scenario.json"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("scenario JSON round trip", "[scenario]") {
  const auto s = *builtin_scenario("li7-hulet");
  const auto back = parse_scenario_json(scenario_to_json(s));
  CHECK(scenario_to_json(back) == scenario_to_json(s));
  CHECK(back.name == s.name);
  CHECK(back.n == s.n);

  const auto path = std::filesystem::path(TRAPBOUND_TEST_TMPDIR) / "scenario_roundtrip.json";
  std::ofstream(path) << scenario_to_json(s);
  CHECK(scenario_to_json(load_scenario(path)) == scenario_to_json(s));
}

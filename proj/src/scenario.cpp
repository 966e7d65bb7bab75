#include "trapbound/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "trapbound/errors.hpp"

namespace trapbound {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {"name", "frequency_hz", "mass_amu", "n",      "variant",
                                          "functional", "interaction", "b",  "v", "r_bohr",
                                          "a_angstrom"};

double number_at(const json& doc, const char* key) {
  const json& v = doc.at(key);
  require(v.is_number(), ErrorKind::InvalidInput, std::string("scenario key '") + key + "' must be a number");
  return v.get<double>();
}

std::string string_at(const json& doc, const char* key) {
  const json& v = doc.at(key);
  require(v.is_string(), ErrorKind::InvalidInput, std::string("scenario key '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::optional<PrefactorVariant> parse_variant(std::string_view name) {
  if (name == "corrected") return PrefactorVariant::CorrectedPairCount;
  if (name == "paper") return PrefactorVariant::PaperNSquared;
  return std::nullopt;
}

std::optional<Functional> parse_functional(std::string_view name) {
  if (name == "harmonic") return Functional::Harmonic;
  if (name == "gaussian") return Functional::Gaussian;
  return std::nullopt;
}

std::optional<Scenario> builtin_scenario(std::string_view name) {
  if (name != "li7-hulet") return std::nullopt;
  Scenario s;
  s.name = "li7-hulet";
  s.frequency_hz = 145.0;
  s.mass_amu = 7.016;
  s.interaction = StepScatteringSpec{-14.5, 2.0};
  s.n = 1000;
  s.variant = PrefactorVariant::CorrectedPairCount;
  s.functional = Functional::Harmonic;
  return s;
}

Scenario parse_scenario_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("scenario is not valid JSON: ") + e.what());
  }
  require(doc.is_object(), ErrorKind::InvalidInput, "scenario must be a JSON object");
  for (const auto& item : doc.items())
    require(kKnownKeys.count(item.key()) == 1, ErrorKind::InvalidInput,
            "unknown scenario key '" + item.key() + "'");

  Scenario s;
  if (doc.contains("name")) s.name = string_at(doc, "name");
  if (doc.contains("frequency_hz")) s.frequency_hz = number_at(doc, "frequency_hz");
  if (doc.contains("mass_amu")) s.mass_amu = number_at(doc, "mass_amu");
  if (doc.contains("n")) {
    require(doc.at("n").is_number_integer(), ErrorKind::InvalidInput, "scenario key 'n' must be an integer");
    s.n = doc.at("n").get<std::int64_t>();
  }
  if (doc.contains("variant")) {
    const auto v = parse_variant(string_at(doc, "variant"));
    require(v.has_value(), ErrorKind::InvalidInput, "variant must be 'paper' or 'corrected'");
    s.variant = *v;
  }
  if (doc.contains("functional")) {
    const auto f = parse_functional(string_at(doc, "functional"));
    require(f.has_value(), ErrorKind::InvalidInput, "functional must be 'harmonic' or 'gaussian'");
    s.functional = *f;
  }

  const bool has_b = doc.contains("b"), has_v = doc.contains("v"), has_a = doc.contains("a_angstrom"),
             has_r = doc.contains("r_bohr");
  if (!doc.contains("interaction")) {
    require(!has_b && !has_v && !has_a && !has_r, ErrorKind::InvalidInput,
            "interaction parameters given without an 'interaction' key");
    return s;
  }
  const std::string style = string_at(doc, "interaction");
  if (style == "delta") {
    require(has_b && !has_v && !has_a && !has_r, ErrorKind::InvalidInput,
            "a delta interaction takes exactly the key 'b'");
    s.interaction = DeltaSpec{number_at(doc, "b")};
  } else if (style == "step") {
    require(has_r && !has_b && (has_v != has_a), ErrorKind::InvalidInput,
            "a step interaction takes 'r_bohr' and exactly one of 'v' or 'a_angstrom'");
    if (has_v)
      s.interaction = StepDepthSpec{number_at(doc, "v"), number_at(doc, "r_bohr")};
    else
      s.interaction = StepScatteringSpec{number_at(doc, "a_angstrom"), number_at(doc, "r_bohr")};
  } else {
    fail(ErrorKind::InvalidInput, "interaction must be 'delta' or 'step', got '" + style + "'");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot read scenario file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario_json(text.str());
}

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["name"] = s.name;
  doc["frequency_hz"] = s.frequency_hz;
  doc["mass_amu"] = s.mass_amu;
  if (s.n) doc["n"] = *s.n;
  doc["variant"] = std::string(to_string(s.variant));
  doc["functional"] = std::string(to_string(s.functional));
  if (s.interaction) {
    std::visit(
        [&doc](const auto& spec) {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, DeltaSpec>) {
            doc["interaction"] = "delta";
            doc["b"] = spec.b;
          } else if constexpr (std::is_same_v<T, StepDepthSpec>) {
            doc["interaction"] = "step";
            doc["v"] = spec.v;
            doc["r_bohr"] = spec.r_bohr;
          } else {
            doc["interaction"] = "step";
            doc["a_angstrom"] = spec.a_angstrom;
            doc["r_bohr"] = spec.r_bohr;
          }
        },
        *s.interaction);
  }
  return doc.dump(2);
}

ResolvedScenario resolve(const Scenario& scenario) {
  require(scenario.interaction.has_value(), ErrorKind::InvalidInput, "no interaction specified");
  const units::UnitContext ctx = units::make_context(scenario.frequency_hz, scenario.mass_amu);
  const std::int64_t n = scenario.n.value_or(1);

  std::optional<CalibrationResult> calibration;
  std::optional<double> range;
  const Interaction interaction = std::visit(
      [&](const auto& spec) -> Interaction {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, DeltaSpec>) {
          return DeltaInteraction{spec.b};
        } else if constexpr (std::is_same_v<T, StepDepthSpec>) {
          range = units::length_to_trap(units::bohr_to_m(spec.r_bohr), ctx);
          return StepWell{spec.v, *range};
        } else {
          range = units::length_to_trap(units::bohr_to_m(spec.r_bohr), ctx);
          const double a = units::length_to_trap(units::angstrom_to_m(spec.a_angstrom), ctx);
          calibration = calibrate_depth(a, *range);
          return StepWell{calibration->v, *range};
        }
      },
      *scenario.interaction);
  validate(interaction);

  ResolvedScenario r{scenario, ctx, TrapSystem{n, 1.0}, interaction, calibration, range};
  validate(r.system);
  return r;
}

}  // namespace trapbound

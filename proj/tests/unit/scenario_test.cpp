// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <string>

#include <doctest.h>

#include "uwake/errors.hpp"
#include "uwake/scenario.hpp"

using namespace uwake;

namespace {

const std::filesystem::path kScenarios{UWAKE_SCENARIO_DIR};

const char* kMinimal = R"({
  "buoys": [{"id": 1, "position": [0, 0, 0]}],
  "nodes": [{"address": 5, "tech": "optical", "position": [0, 0, 20]}],
  "wake_requests": [{"time_s": 1.5, "address": 5}]
})";

std::string with_node(const std::string& node_json)
{
    return R"({"buoys": [{"id": 1, "position": [0, 0, 0]}], "nodes": [)" + node_json + "]}";
}

}  // namespace

TEST_CASE("minimal scenario fills defaults")
{
    const sim::SimConfig c = parse_scenario_text(kMinimal);
    CHECK(c.medium == Medium{});
    CHECK(c.uav == sim::Uav{});
    REQUIRE(c.buoys.size() == 1);
    CHECK(c.buoys[0].transmitters == std::vector{Technology::Acoustic});
    REQUIRE(c.nodes.size() == 1);
    const sim::Node& n = c.nodes[0];
    CHECK(n.address == 5);
    CHECK(n.technology() == Technology::Optical);
    CHECK(n.sensitivity == technology_profile(Technology::Optical).default_sensitivity);
    CHECK(n.energy == default_energy_profile(Technology::Optical));
    CHECK(std::get<optical::OpticalLinkParams>(n.link) == optical::OpticalLinkParams{});
    REQUIRE(c.wake_requests.size() == 1);
    CHECK(c.wake_requests[0] == sim::WakeRequest{1.5, 5});
    CHECK(c.horizon_s == 60.0);
}

TEST_CASE("node above the surface is rejected")
{
    CHECK_THROWS_WITH_AS(parse_scenario_text(with_node(R"({"address": 1, "tech": "mi", "position": [0, 0, -3]})")),
                         doctest::Contains("node above surface"), ValidationError);
    CHECK_THROWS_AS(parse_scenario_text(with_node(R"({"address": 1, "tech": "mi", "position": [0, 0, 0]})")),
                    ValidationError);
}

TEST_CASE("unknown keys are parse errors naming the path")
{
    CHECK_THROWS_WITH_AS(
        parse_scenario_text(with_node(R"({"address": 1, "tech": "mi", "position": [0, 0, 3], "energy": {"x": 1}})")),
        doctest::Contains("nodes[0].energy.x"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"bogus": 1})"), ParseError);
}

TEST_CASE("syntax errors report a line")
{
    try {
        parse_scenario_text("{\n  \"horizon_s\": 10,\n  \"nodes\": [,]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("type and value errors")
{
    CHECK_THROWS_AS(parse_scenario_text(R"({"horizon_s": "long"})"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text(with_node(R"({"address": 1, "tech": "sonar", "position": [0, 0, 3]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_scenario_text(with_node(R"({"address": 70000, "tech": "mi", "position": [0, 0, 3]})")),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario_text(with_node(
                        R"({"address": 1, "tech": "optical", "position": [0, 0, 3], "link": {"water": "harbor", "extinction_per_m": 0.2}})")),
                    ParseError);
    CHECK_THROWS_AS(parse_scenario_text(with_node(
                        R"({"address": 1, "tech": "acoustic", "position": [0, 0, 3], "link": {"spreading": 12}})")),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(kScenarios / "does-not-exist.json"), ParseError);
}

TEST_CASE("water type selects the extinction coefficient")
{
    const sim::SimConfig c = parse_scenario_text(
        with_node(R"({"address": 1, "tech": "optical", "position": [0, 0, 3], "link": {"water": "harbor"}})"));
    CHECK(std::get<optical::OpticalLinkParams>(c.nodes[0].link).extinction_per_m ==
          optical::extinction_coefficient(optical::WaterType::Harbor));
}

TEST_CASE("presets round-trip through serialization")
{
    for (const char* name : {"acoustic-fig3.json", "optical-fig4.json", "mi-fig5.json"}) {
        CAPTURE(name);
        const sim::SimConfig c = parse_scenario(kScenarios / name);
        const std::string text = serialize_scenario(c);
        const sim::SimConfig again = parse_scenario_text(text);
        CHECK(again == c);
        CHECK(serialize_scenario(again) == text);
    }
}

TEST_CASE("policy key")
{
    const sim::SimConfig c = parse_scenario_text(R"({"policy": {"kind": "dc", "rate_per_hour": 4}})");
    CHECK(c.policy == WakePolicy::duty_cycle(4));
    CHECK_THROWS_AS(parse_scenario_text(R"({"policy": {"kind": "sometimes"}})"), ParseError);
}

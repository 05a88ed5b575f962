// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "uwake/sim.hpp"

namespace uwake {

/// Reads a JSON scenario. Missing link, sensitivity and energy fields take the
/// published defaults for the node's technology; unknown keys are rejected.
/// Throws ParseError (syntax, types, unknown keys) or ValidationError.
sim::SimConfig parse_scenario(const std::filesystem::path& path);
sim::SimConfig parse_scenario_text(std::string_view text);

/// Writes every field explicitly; parse_scenario_text(serialize_scenario(c)) == c.
std::string serialize_scenario(const sim::SimConfig& config);

}  // namespace uwake

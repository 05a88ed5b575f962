// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>

#include "uwake/acoustic.hpp"
#include "uwake/mi.hpp"
#include "uwake/optical.hpp"

namespace uwake {

using LinkParams =
    std::variant<acoustic::AcousticLinkParams, optical::OpticalLinkParams, mi::MiLinkParams>;

Technology technology_of(const LinkParams& link) noexcept;

/// Default link parameters for a technology.
LinkParams default_link(Technology t);

void validate(const LinkParams& link);

/// Received level at `distance_m`. Distances below the link's reference
/// distance (1 m acoustic, coil radius MI) are evaluated at the reference.
PowerDbm received_power_clamped(const LinkParams& link, double distance_m);

double max_range(const LinkParams& link, PowerDbm sensitivity,
                 double tol = kDefaultRangeTolerance);

}  // namespace uwake

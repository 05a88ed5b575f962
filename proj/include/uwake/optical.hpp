// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "uwake/core.hpp"
#include "uwake/kernels.hpp"
#include "uwake/range_solver.hpp"

namespace uwake::optical {

enum class WaterType { PureSea, ClearOcean, Coastal, Harbor };

/// Per-meter extinction at ~530 nm from the usual underwater optical tables.
double extinction_coefficient(WaterType w) noexcept;
std::string_view to_string(WaterType w) noexcept;
std::optional<WaterType> water_type_from_string(std::string_view s) noexcept;

struct OpticalLinkParams {
    double transmit_power_mw = 250.0;
    double aperture_area_m2 = 0.0011;  // transmit and receive apertures are equal
    /// Cone half-angle. The default reads the commonly quoted 0.5 deg divergence
    /// as the full angle.
    double divergence_half_angle_deg = 0.25;
    double extinction_per_m = 0.151;  // clear ocean
    double misalignment_beta_deg = 0.0;

    friend bool operator==(const OpticalLinkParams&, const OpticalLinkParams&) = default;
};

void validate(const OpticalLinkParams& params);

inline constexpr double kMinRangeBracket = 0.1;
inline constexpr double kMaxRangeBracket = 1000.0;

/// Geometric capture min(1, A cos(beta) / (pi (d tan(theta))^2)).
double geometric_capture(const OpticalLinkParams& params, double distance_m);

/// Received optical power for d > 0 (Beer-Lambert extinction times geometric capture).
PowerDbm received_power_dbm(const OpticalLinkParams& params, double distance_m);

void received_power_dbm(const OpticalLinkParams& params, std::span<const double> distance_m,
                        std::span<double> out_dbm);

kernels::LogDistanceLaw log_distance_law(const OpticalLinkParams& params);

double optical_max_range(const OpticalLinkParams& params, PowerDbm sensitivity,
                         double tol = kDefaultRangeTolerance);

}  // namespace uwake::optical

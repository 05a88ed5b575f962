// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/optical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uwake/errors.hpp"

namespace uwake::optical {

double extinction_coefficient(WaterType w) noexcept
{
    switch (w) {
    case WaterType::PureSea: return 0.056;
    case WaterType::ClearOcean: return 0.151;
    case WaterType::Coastal: return 0.305;
    case WaterType::Harbor: return 2.17;
    }
    return 0.0;
}

std::string_view to_string(WaterType w) noexcept
{
    switch (w) {
    case WaterType::PureSea: return "pure_sea";
    case WaterType::ClearOcean: return "clear_ocean";
    case WaterType::Coastal: return "coastal";
    case WaterType::Harbor: return "harbor";
    }
    return "unknown";
}

std::optional<WaterType> water_type_from_string(std::string_view s) noexcept
{
    for (auto w : {WaterType::PureSea, WaterType::ClearOcean, WaterType::Coastal, WaterType::Harbor})
        if (to_string(w) == s) return w;
    return std::nullopt;
}

void validate(const OpticalLinkParams& p)
{
    if (!(p.transmit_power_mw > 0.0) || !std::isfinite(p.transmit_power_mw))
        throw DomainError("optical transmit power must be positive");
    if (!(p.aperture_area_m2 > 0.0) || !std::isfinite(p.aperture_area_m2))
        throw DomainError("optical aperture area must be positive");
    if (!(p.divergence_half_angle_deg > 0.0 && p.divergence_half_angle_deg < 90.0))
        throw DomainError("optical divergence half-angle must be in (0, 90) deg");
    if (!(p.extinction_per_m >= 0.0) || !std::isfinite(p.extinction_per_m))
        throw DomainError("optical extinction coefficient must be >= 0");
    if (!(p.misalignment_beta_deg >= 0.0 && p.misalignment_beta_deg <= 90.0))
        throw DomainError("optical misalignment must be in [0, 90] deg");
}

namespace {

void require_positive_distance(double distance_m)
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw DomainError("optical distance must be > 0");
}

double beam_tan(const OpticalLinkParams& p)
{
    return std::tan(p.divergence_half_angle_deg * std::numbers::pi / 180.0);
}

}  // namespace

double geometric_capture(const OpticalLinkParams& params, double distance_m)
{
    validate(params);
    require_positive_distance(distance_m);
    const double radius = distance_m * beam_tan(params);
    const double beam_area = std::numbers::pi * radius * radius;
    return std::min(1.0, params.aperture_area_m2 * cos_deg(params.misalignment_beta_deg) / beam_area);
}

kernels::LogDistanceLaw log_distance_law(const OpticalLinkParams& params)
{
    validate(params);
    const double t = beam_tan(params);
    // A cos(beta) / (pi d^2 tan^2) in dB, split into a constant and -20log10(d)
    const double captured = params.aperture_area_m2 * cos_deg(params.misalignment_beta_deg);
    return kernels::LogDistanceLaw{
        .base_db = 10.0 * std::log10(params.transmit_power_mw),
        .geometric_db = linear_to_dbm(captured / (std::numbers::pi * t * t)).value,
        .cap_db = 0.0,
        .log_slope_db = 20.0,
        .linear_db_per_m = 10.0 * params.extinction_per_m * std::numbers::log10e,
    };
}

PowerDbm received_power_dbm(const OpticalLinkParams& params, double distance_m)
{
    // Summed in dB so that exp(-c d) cannot underflow in turbid water.
    const double capture = geometric_capture(params, distance_m);
    if (capture == 0.0) return PowerDbm::zero_power();
    return PowerDbm{10.0 * std::log10(params.transmit_power_mw) + 10.0 * std::log10(capture) -
                    10.0 * params.extinction_per_m * distance_m * std::numbers::log10e};
}

void received_power_dbm(const OpticalLinkParams& params, std::span<const double> distance_m,
                        std::span<double> out_dbm)
{
    if (distance_m.size() != out_dbm.size()) throw DomainError("output span size mismatch");
    for (const double d : distance_m) require_positive_distance(d);
    kernels::evaluate(log_distance_law(params), distance_m, out_dbm);
}

double optical_max_range(const OpticalLinkParams& params, PowerDbm sensitivity, double tol)
{
    validate(params);
    return solve_max_range([&params](double d) { return received_power_dbm(params, d); },
                           sensitivity, kMinRangeBracket, kMaxRangeBracket, tol);
}

}  // namespace uwake::optical

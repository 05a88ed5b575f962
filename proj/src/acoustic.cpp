// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/acoustic.hpp"

#include <cmath>
#include <limits>

#include "uwake/errors.hpp"

namespace uwake::acoustic {

namespace {

void require_reference_distance(double distance_m)
{
    if (!(distance_m >= kReferenceDistance))
        throw DomainError("acoustic distance must be >= 1 m (source level reference)");
}

}  // namespace

void validate(const AcousticLinkParams& params)
{
    if (!(params.frequency_khz > 0.0) || !std::isfinite(params.frequency_khz))
        throw DomainError("acoustic frequency must be positive");
    if (!std::isfinite(params.source_level_db))
        throw DomainError("acoustic source level must be finite");
    const double k = params.spreading_exponent;
    if (k != 10.0 && k != 15.0 && k != 20.0)
        throw DomainError("acoustic spreading exponent must be 10, 15 or 20");
    validate(params.medium);
}

double thorp_absorption(double frequency_khz)
{
    if (!(frequency_khz > 0.0) || !std::isfinite(frequency_khz))
        throw DomainError("Thorp absorption needs frequency > 0 kHz");
    const double f2 = frequency_khz * frequency_khz;
    return 0.11 * f2 / (1.0 + f2) + 44.0 * f2 / (4100.0 + f2) + 2.75e-4 * f2 + 0.003;
}

double transmission_loss(const AcousticLinkParams& params, double distance_m)
{
    validate(params);
    require_reference_distance(distance_m);
    return params.spreading_exponent * std::log10(distance_m) +
           thorp_absorption(params.frequency_khz) * distance_m / 1000.0;
}

PowerDbm received_power_density_dbm(const AcousticLinkParams& params, double distance_m)
{
    const double received_level_db = params.source_level_db - transmission_loss(params, distance_m);
    const double pressure_pa = std::pow(10.0, received_level_db / 20.0) * 1e-6;
    const double impedance = params.medium.water_density * params.medium.sound_speed;
    const double intensity_w_m2 = pressure_pa * pressure_pa / impedance;
    return linear_to_dbm(intensity_w_m2 * 1000.0);
}

kernels::LogDistanceLaw log_distance_law(const AcousticLinkParams& params)
{
    validate(params);
    const double impedance = params.medium.water_density * params.medium.sound_speed;
    // 20log10(1e-6 Pa/uPa) + 10log10(1000 mW/W) = -90 dB
    return kernels::LogDistanceLaw{
        .base_db = params.source_level_db - 90.0 - 10.0 * std::log10(impedance),
        .geometric_db = 0.0,
        .cap_db = std::numeric_limits<double>::infinity(),
        .log_slope_db = params.spreading_exponent,
        .linear_db_per_m = thorp_absorption(params.frequency_khz) / 1000.0,
    };
}

void received_power_density_dbm(const AcousticLinkParams& params, std::span<const double> distance_m,
                                std::span<double> out_dbm)
{
    if (distance_m.size() != out_dbm.size()) throw DomainError("output span size mismatch");
    for (const double d : distance_m) require_reference_distance(d);
    kernels::evaluate(log_distance_law(params), distance_m, out_dbm);
}

double acoustic_max_range(const AcousticLinkParams& params, PowerDbm sensitivity, double tol)
{
    validate(params);
    return solve_max_range(
        [&params](double d) { return received_power_density_dbm(params, d); }, sensitivity,
        kReferenceDistance, kMaxRangeBracket, tol);
}

}  // namespace uwake::acoustic

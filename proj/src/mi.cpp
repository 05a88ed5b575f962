// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/mi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uwake/errors.hpp"

namespace uwake::mi {

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

// 10log10(N_t N_r a_t^3 a_r^3 cos^2(beta)) + calibration; -inf when fully misaligned.
double coupling_db(const MiLinkParams& p)
{
    const double c = cos_deg(p.misalignment_beta_deg);
    const double coupling = p.turns_tx * p.turns_rx * std::pow(p.coil_radius_tx_m, 3) *
                            std::pow(p.coil_radius_rx_m, 3) * c * c;
    return p.calibration_gain_db + linear_to_dbm(coupling).value;
}

}  // namespace

void validate(const MiLinkParams& p)
{
    if (!positive_finite(p.transmit_power_mw)) throw DomainError("MI transmit power must be positive");
    if (!positive_finite(p.frequency_khz)) throw DomainError("MI frequency must be positive");
    if (!positive_finite(p.permeability_h_per_m)) throw DomainError("MI permeability must be positive");
    if (!positive_finite(p.turns_tx) || !positive_finite(p.turns_rx))
        throw DomainError("MI coil turns must be positive");
    if (!positive_finite(p.coil_radius_tx_m) || !positive_finite(p.coil_radius_rx_m))
        throw DomainError("MI coil radii must be positive");
    if (!positive_finite(p.unit_coil_resistance_ohm_per_m))
        throw DomainError("MI unit coil resistance must be positive");
    if (!(p.misalignment_beta_deg >= 0.0 && p.misalignment_beta_deg <= 90.0))
        throw DomainError("MI misalignment must be in [0, 90] deg");
    if (!std::isfinite(p.calibration_gain_db)) throw DomainError("MI calibration gain must be finite");
}

double reference_distance(const MiLinkParams& params) noexcept
{
    return std::max(params.coil_radius_tx_m, params.coil_radius_rx_m);
}

double mi_path_gain_db(const MiLinkParams& params, double distance_m)
{
    validate(params);
    if (!(distance_m >= reference_distance(params)) || !std::isfinite(distance_m))
        throw DomainError("MI distance must be >= the larger coil radius");
    return coupling_db(params) - 60.0 * std::log10(distance_m);
}

PowerDbm received_power_dbm(const MiLinkParams& params, double distance_m)
{
    return PowerDbm{10.0 * std::log10(params.transmit_power_mw) + mi_path_gain_db(params, distance_m)};
}

kernels::LogDistanceLaw log_distance_law(const MiLinkParams& params)
{
    validate(params);
    return kernels::LogDistanceLaw{
        .base_db = 10.0 * std::log10(params.transmit_power_mw) + coupling_db(params),
        .geometric_db = 0.0,
        .cap_db = std::numeric_limits<double>::infinity(),
        .log_slope_db = 60.0,
        .linear_db_per_m = 0.0,
    };
}

void received_power_dbm(const MiLinkParams& params, std::span<const double> distance_m,
                        std::span<double> out_dbm)
{
    if (distance_m.size() != out_dbm.size()) throw DomainError("output span size mismatch");
    const double d_ref = reference_distance(params);
    for (const double d : distance_m)
        if (!(d >= d_ref)) throw DomainError("MI distance must be >= the larger coil radius");
    kernels::evaluate(log_distance_law(params), distance_m, out_dbm);
}

double mi_max_range(const MiLinkParams& params, PowerDbm sensitivity, double tol)
{
    validate(params);
    return solve_max_range([&params](double d) { return received_power_dbm(params, d); },
                           sensitivity, reference_distance(params), kMaxRangeBracket, tol);
}

}  // namespace uwake::mi

// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <span>

#include "uwake/core.hpp"
#include "uwake/kernels.hpp"
#include "uwake/range_solver.hpp"

namespace uwake::mi {

/// Gain that puts the -69 dBm sensitivity crossing at 44 m for the default
/// coils (0.5 m radius, 30 turns each side, aligned) and 1 W transmit power.
/// It lumps frequency, coil resistance and resonant matching into one constant.
inline constexpr double kDefaultCalibrationGainDb = -11.873464765383;

struct MiLinkParams {
    double transmit_power_mw = 1000.0;
    double frequency_khz = 75.0;
    double permeability_h_per_m = 4.0e-7 * std::numbers::pi;
    double turns_tx = 30.0;
    double turns_rx = 30.0;
    double coil_radius_tx_m = 0.5;
    double coil_radius_rx_m = 0.5;
    double unit_coil_resistance_ohm_per_m = 0.0166;  // carried, unused by the calibrated law
    double misalignment_beta_deg = 0.0;
    double calibration_gain_db = kDefaultCalibrationGainDb;

    friend bool operator==(const MiLinkParams&, const MiLinkParams&) = default;
};

void validate(const MiLinkParams& params);

/// Smallest distance where the dipole approximation is used: the larger coil radius.
double reference_distance(const MiLinkParams& params) noexcept;

inline constexpr double kMaxRangeBracket = 1000.0;

/// Near-field coupling gain in dB; falls as 1/d^6 (-60 dB/decade).
double mi_path_gain_db(const MiLinkParams& params, double distance_m);

PowerDbm received_power_dbm(const MiLinkParams& params, double distance_m);

void received_power_dbm(const MiLinkParams& params, std::span<const double> distance_m,
                        std::span<double> out_dbm);

kernels::LogDistanceLaw log_distance_law(const MiLinkParams& params);

double mi_max_range(const MiLinkParams& params, PowerDbm sensitivity,
                    double tol = kDefaultRangeTolerance);

}  // namespace uwake::mi

// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "uwake/core.hpp"
#include "uwake/kernels.hpp"
#include "uwake/range_solver.hpp"

namespace uwake::acoustic {

// Acoustic levels in this namespace are sound power densities in dBm re 1 mW/m^2.

struct AcousticLinkParams {
    double source_level_db = 190.0;  // dB re 1 uPa at 1 m
    double frequency_khz = 8.0;
    Medium medium{};
    double spreading_exponent = 20.0;  // 10 cylindrical, 15 practical, 20 spherical

    friend bool operator==(const AcousticLinkParams&, const AcousticLinkParams&) = default;
};

void validate(const AcousticLinkParams& params);

inline constexpr double kReferenceDistance = 1.0;  // m, source level reference
inline constexpr double kMaxRangeBracket = 10'000.0;

/// Thorp's empirical seawater absorption, dB/km, for f in kHz.
double thorp_absorption(double frequency_khz);

/// Spreading plus absorption loss in dB for d >= 1 m.
double transmission_loss(const AcousticLinkParams& params, double distance_m);

/// Received sound power density (re 1 mW/m^2) of the plane wave at d >= 1 m.
PowerDbm received_power_density_dbm(const AcousticLinkParams& params, double distance_m);

/// Batch form over a distance grid; same values as the scalar call.
void received_power_density_dbm(const AcousticLinkParams& params, std::span<const double> distance_m,
                                std::span<double> out_dbm);

/// Closed-form coefficients used by the batch kernels.
kernels::LogDistanceLaw log_distance_law(const AcousticLinkParams& params);

double acoustic_max_range(const AcousticLinkParams& params, PowerDbm sensitivity,
                          double tol = kDefaultRangeTolerance);

}  // namespace uwake::acoustic

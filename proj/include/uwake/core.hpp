// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <string_view>

namespace uwake {

/// Power level in dB referenced to 1 mW.
///
/// Optical and MI links carry received power (re 1 mW). The acoustic link
/// carries received power *density* (re 1 mW/m^2); the same type is used and
/// the reference is documented at each acoustic entry point. Zero linear power
/// is represented by negative infinity.
struct PowerDbm {
    double value = 0.0;

    static constexpr PowerDbm zero_power() noexcept
    {
        return PowerDbm{-std::numeric_limits<double>::infinity()};
    }
    bool is_zero_power() const noexcept { return std::isinf(value) && value < 0.0; }

    friend constexpr auto operator<=>(const PowerDbm&, const PowerDbm&) = default;
};

/// 10^(p/10); the negative-infinity sentinel maps to 0.
double dbm_to_linear(PowerDbm p) noexcept;

/// Inverse of dbm_to_linear; 0 maps to the sentinel. Negative input is a DomainError.
PowerDbm linear_to_dbm(double linear);

/// Horizontal x, y in meters; z in meters positive down with the water
/// surface at 0 (buoys z = 0, UAVs z < 0, underwater nodes z > 0).
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool is_finite() const noexcept
    {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
    friend bool operator==(const Position3D&, const Position3D&) = default;
};

double distance(const Position3D& a, const Position3D& b) noexcept;

struct Medium {
    double water_density = 1000.0;  // kg/m^3
    double sound_speed = 1500.0;    // m/s

    friend bool operator==(const Medium&, const Medium&) = default;
};

void validate(const Medium& m);

enum class Technology { Acoustic, Optical, Mi };

std::string_view to_string(Technology t) noexcept;
/// Accepts "acoustic", "optical", "mi". Throws DomainError otherwise.
Technology technology_from_string(std::string_view s);

inline constexpr double kSoundSpeedWater = 1500.0;  // m/s
inline constexpr double kSpeedOfLight = 3.0e8;      // m/s

/// Reference data for one wake-up technology.
struct TechnologyProfile {
    Technology kind;
    double propagation_speed;  // m/s
    PowerDbm default_sensitivity;
    std::string_view range_class;
    std::string_view data_rate_class;  // metadata only, never simulated
};

const TechnologyProfile& technology_profile(Technology t) noexcept;

/// Seconds for a wake-up signal of the given technology to travel `distance_m`.
double propagation_delay(const TechnologyProfile& profile, double distance_m);

/// Degrees to cosine with cos(90) pinned to exactly 0 so that a fully
/// misaligned receiver captures no power.
double cos_deg(double degrees) noexcept;

}  // namespace uwake

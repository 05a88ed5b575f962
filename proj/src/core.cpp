// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/core.hpp"

#include <array>
#include <numbers>
#include <string>

#include "uwake/errors.hpp"

namespace uwake {

double dbm_to_linear(PowerDbm p) noexcept
{
    if (p.is_zero_power()) return 0.0;
    return std::pow(10.0, p.value / 10.0);
}

PowerDbm linear_to_dbm(double linear)
{
    if (!(linear >= 0.0)) throw DomainError("linear power must be non-negative");
    if (linear == 0.0) return PowerDbm::zero_power();
    return PowerDbm{10.0 * std::log10(linear)};
}

double distance(const Position3D& a, const Position3D& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

void validate(const Medium& m)
{
    if (!(m.water_density > 0.0) || !std::isfinite(m.water_density))
        throw DomainError("medium water density must be positive");
    if (!(m.sound_speed > 0.0) || !std::isfinite(m.sound_speed))
        throw DomainError("medium sound speed must be positive");
}

std::string_view to_string(Technology t) noexcept
{
    switch (t) {
    case Technology::Acoustic: return "acoustic";
    case Technology::Optical: return "optical";
    case Technology::Mi: return "mi";
    }
    return "unknown";
}

Technology technology_from_string(std::string_view s)
{
    if (s == "acoustic") return Technology::Acoustic;
    if (s == "optical") return Technology::Optical;
    if (s == "mi") return Technology::Mi;
    throw DomainError("unknown technology '" + std::string(s) + "'");
}

namespace {

constexpr std::array<TechnologyProfile, 3> kProfiles{{
    {Technology::Acoustic, kSoundSpeedWater, PowerDbm{-10.0}, "long range (~km)", "kbps"},
    {Technology::Optical, kSpeedOfLight, PowerDbm{-53.0}, "medium range (~10-100 m)", "Gbps"},
    {Technology::Mi, kSpeedOfLight, PowerDbm{-69.0}, "medium range (~10-100 m)", "Mbps"},
}};

}  // namespace

const TechnologyProfile& technology_profile(Technology t) noexcept
{
    return kProfiles[static_cast<std::size_t>(t)];
}

double propagation_delay(const TechnologyProfile& profile, double distance_m)
{
    if (!(distance_m >= 0.0)) throw DomainError("distance must be non-negative");
    return distance_m / profile.propagation_speed;
}

double cos_deg(double degrees) noexcept
{
    if (degrees == 90.0 || degrees == -90.0) return 0.0;
    return std::cos(degrees * std::numbers::pi / 180.0);
}

}  // namespace uwake

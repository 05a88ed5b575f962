// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/energy.hpp"

#include <algorithm>
#include <cmath>

#include "uwake/errors.hpp"
#include "uwake/kernels.hpp"

namespace uwake {

EnergyProfile default_energy_profile(Technology t) noexcept
{
    switch (t) {
    case Technology::Acoustic: return {950.0, 0.5, 0.015, 1.0};
    case Technology::Optical: return {950.0, 3.6, 0.083, 1.0};
    case Technology::Mi: return {950.0, 0.49, 0.043, 1.0};
    }
    return {};
}

void validate(const EnergyProfile& p)
{
    if (!(p.battery_capacity_mah > 0.0) || !std::isfinite(p.battery_capacity_mah))
        throw DomainError("battery capacity must be positive");
    if (!(p.sleep_current_ma > 0.0)) throw DomainError("sleep current must be positive");
    if (!(p.active_current_ma > p.sleep_current_ma) || !std::isfinite(p.active_current_ma))
        throw DomainError("active current must exceed sleep current");
    if (!(p.active_duration_s > 0.0) || !std::isfinite(p.active_duration_s))
        throw DomainError("active duration must be positive");
}

std::string_view to_string(WakePolicy::Kind k) noexcept
{
    switch (k) {
    case WakePolicy::Kind::NoWakeup: return "nowu";
    case WakePolicy::Kind::DutyCycle: return "dc";
    case WakePolicy::Kind::OnDemand: return "od";
    }
    return "unknown";
}

namespace {

void validate_rate(const EnergyProfile& profile, double n)
{
    if (!(n >= 0.0) || !std::isfinite(n))
        throw PolicyError("transmissions per hour must be a finite value >= 0");
    if (n * profile.active_duration_s > 3600.0)
        throw PolicyError("rate * active duration exceeds one hour");
}

}  // namespace

void validate(const EnergyProfile& profile, const WakePolicy& policy)
{
    validate(profile);
    if (policy.kind != WakePolicy::Kind::NoWakeup)
        validate_rate(profile, policy.transmissions_per_hour);
}

double average_current(const EnergyProfile& profile, const WakePolicy& policy)
{
    validate(profile, policy);
    if (policy.kind == WakePolicy::Kind::NoWakeup) return profile.active_current_ma;
    const double active_fraction = policy.transmissions_per_hour * profile.active_duration_s / 3600.0;
    const double avg = active_fraction * profile.active_current_ma +
                       (1.0 - active_fraction) * profile.sleep_current_ma;
    return std::clamp(avg, profile.sleep_current_ma, profile.active_current_ma);
}

double lifetime_hours(const EnergyProfile& profile, const WakePolicy& policy)
{
    return profile.battery_capacity_mah / average_current(profile, policy);
}

void lifetime_hours(const EnergyProfile& profile, WakePolicy::Kind kind,
                    std::span<const double> rates_per_hour, std::span<double> out_hours)
{
    validate(profile);
    if (rates_per_hour.size() != out_hours.size()) throw DomainError("output span size mismatch");
    if (kind == WakePolicy::Kind::NoWakeup) {
        std::fill(out_hours.begin(), out_hours.end(),
                  profile.battery_capacity_mah / profile.active_current_ma);
        return;
    }
    for (const double n : rates_per_hour) validate_rate(profile, n);
    kernels::lifetime_hours(
        kernels::LifetimeLaw{profile.battery_capacity_mah, profile.active_current_ma,
                             profile.sleep_current_ma, profile.active_duration_s},
        rates_per_hour, out_hours);
}

double active_charge_ratio(const EnergyProfile& profile, const WakePolicy& duty_cycle,
                           const WakePolicy& on_demand)
{
    if (duty_cycle.kind != WakePolicy::Kind::DutyCycle || on_demand.kind != WakePolicy::Kind::OnDemand)
        throw PolicyError("active charge ratio compares a duty-cycle policy to an on-demand one");
    validate(profile, duty_cycle);
    validate(profile, on_demand);
    if (on_demand.transmissions_per_hour == 0.0) throw PolicyError("on-demand rate must be > 0");
    if (duty_cycle.transmissions_per_hour == 0.0) throw PolicyError("duty-cycle rate must be > 0");
    return duty_cycle.transmissions_per_hour / on_demand.transmissions_per_hour;
}

}  // namespace uwake

// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>

#include "uwake/core.hpp"

namespace uwake {

struct EnergyProfile {
    double battery_capacity_mah = 950.0;
    double active_current_ma = 0.5;
    double sleep_current_ma = 0.015;
    double active_duration_s = 1.0;

    friend bool operator==(const EnergyProfile&, const EnergyProfile&) = default;
};

/// Published node profiles: 950 mAh, 1 s bursts, and per-technology currents.
EnergyProfile default_energy_profile(Technology t) noexcept;

void validate(const EnergyProfile& profile);

struct WakePolicy {
    enum class Kind { NoWakeup, DutyCycle, OnDemand };

    Kind kind = Kind::OnDemand;
    double transmissions_per_hour = 0.0;  // ignored for NoWakeup

    static WakePolicy no_wakeup() noexcept { return {Kind::NoWakeup, 0.0}; }
    static WakePolicy duty_cycle(double n) noexcept { return {Kind::DutyCycle, n}; }
    static WakePolicy on_demand(double n) noexcept { return {Kind::OnDemand, n}; }

    friend bool operator==(const WakePolicy&, const WakePolicy&) = default;
};

/// "nowu", "dc", "od".
std::string_view to_string(WakePolicy::Kind k) noexcept;

/// Throws PolicyError when n < 0, n is not finite, or n * active_duration > 3600 s.
void validate(const EnergyProfile& profile, const WakePolicy& policy);

/// Hour-averaged current draw in mA. NoWakeup keeps the node active all the
/// time; the other two policies differ only in their configured rate.
double average_current(const EnergyProfile& profile, const WakePolicy& policy);

double lifetime_hours(const EnergyProfile& profile, const WakePolicy& policy);

/// Lifetime over a grid of rates for one policy kind, using the batch kernels.
void lifetime_hours(const EnergyProfile& profile, WakePolicy::Kind kind,
                    std::span<const double> rates_per_hour, std::span<double> out_hours);

/// Active-mode charge per hour under `duty_cycle` relative to `on_demand`.
/// The active duration and current cancel, leaving n_dc / n_od.
double active_charge_ratio(const EnergyProfile& profile, const WakePolicy& duty_cycle,
                           const WakePolicy& on_demand);

}  // namespace uwake

// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>

namespace uwake::sim {

/// Simulation clock value with 1 ns resolution. Integer ticks keep event
/// ordering exact and runs reproducible.
class SimTime {
public:
    constexpr SimTime() = default;

    static constexpr SimTime from_ns(std::int64_t ns) noexcept { return SimTime{ns}; }
    /// Rounds to the nearest nanosecond.
    static SimTime from_seconds(double s);
    /// Rounds up to the next nanosecond.
    static SimTime from_seconds_ceil(double s);

    constexpr std::int64_t ns() const noexcept { return ns_; }
    constexpr double seconds() const noexcept { return static_cast<double>(ns_) * 1e-9; }

    constexpr SimTime operator+(SimTime o) const noexcept { return SimTime{ns_ + o.ns_}; }
    constexpr SimTime operator-(SimTime o) const noexcept { return SimTime{ns_ - o.ns_}; }
    constexpr SimTime& operator+=(SimTime o) noexcept
    {
        ns_ += o.ns_;
        return *this;
    }

    friend constexpr auto operator<=>(SimTime, SimTime) = default;

private:
    constexpr explicit SimTime(std::int64_t ns) : ns_(ns) {}
    std::int64_t ns_ = 0;
};

}  // namespace uwake::sim

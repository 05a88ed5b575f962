// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "uwake/core.hpp"

namespace uwake {

/// Received power (dBm) as a function of distance (m). Must be non-increasing.
using PowerVsDistance = std::function<PowerDbm(double)>;

inline constexpr double kDefaultRangeTolerance = 0.01;  // m

/// Largest distance in [d_min, d_max] at which `link` still meets `sensitivity`.
///
/// Bisection keeps `lo` with P(lo) >= sensitivity and `hi` with P(hi) < sensitivity
/// until hi - lo <= tol, then returns lo. The true crossing therefore lies in
/// [result, result + tol].
///
/// Throws NoSolution when P(d_min) < sensitivity or P(d_max) >= sensitivity,
/// DomainError for an empty bracket or tol <= 0.
double solve_max_range(const PowerVsDistance& link, PowerDbm sensitivity, double d_min,
                       double d_max, double tol = kDefaultRangeTolerance);

}  // namespace uwake

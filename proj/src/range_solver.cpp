// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/range_solver.hpp"

#include <cmath>
#include <string>

#include "uwake/errors.hpp"

namespace uwake {

double solve_max_range(const PowerVsDistance& link, PowerDbm sensitivity, double d_min,
                       double d_max, double tol)
{
    if (!(d_min < d_max) || !std::isfinite(d_min) || !std::isfinite(d_max))
        throw DomainError("range bracket must satisfy d_min < d_max");
    if (!(tol > 0.0)) throw DomainError("range tolerance must be positive");

    if (link(d_min) < sensitivity)
        throw NoSolution("received power below sensitivity already at d_min = " +
                         std::to_string(d_min) + " m");
    if (link(d_max) >= sensitivity)
        throw NoSolution("received power still above sensitivity at d_max = " +
                         std::to_string(d_max) + " m");

    double lo = d_min;
    double hi = d_max;
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        if (link(mid) >= sensitivity)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace uwake

// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "kernels_internal.hpp"

namespace uwake::kernels::detail {

namespace {

void log10_scalar(const double* x, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) out[i] = std::log10(x[i]);
}

void log_distance_scalar(const LogDistanceLaw& law, const double* d, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        const double geometric = law.geometric_db - law.log_slope_db * std::log10(d[i]);
        out[i] = law.base_db + std::min(law.cap_db, geometric) - law.linear_db_per_m * d[i];
    }
}

void lifetime_scalar(const LifetimeLaw& law, const double* rate, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) out[i] = law.capacity_mah / average_current(law, rate[i]);
}

}  // namespace

const KernelTable kScalarTable{log10_scalar, log_distance_scalar, lifetime_scalar};

}  // namespace uwake::kernels::detail

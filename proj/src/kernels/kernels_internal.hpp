// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "uwake/kernels.hpp"

namespace uwake::kernels::detail {

struct KernelTable {
    void (*log10)(const double* x, double* out, std::size_t n);
    void (*log_distance)(const LogDistanceLaw& law, const double* d, double* out, std::size_t n);
    void (*lifetime)(const LifetimeLaw& law, const double* rate, double* out, std::size_t n);
};

extern const KernelTable kScalarTable;
#if defined(UWAKE_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

// Shared by every variant so scalar tails and the single-point API match.
inline double average_current(const LifetimeLaw& law, double rate) noexcept
{
    const double f = rate * law.active_s / 3600.0;
    double avg = f * law.active_ma + (1.0 - f) * law.sleep_ma;
    if (avg < law.sleep_ma) avg = law.sleep_ma;
    if (avg > law.active_ma) avg = law.active_ma;
    return avg;
}

}  // namespace uwake::kernels::detail

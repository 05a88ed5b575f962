// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kernels_internal.hpp"
#include "uwake/errors.hpp"

namespace uwake::kernels {

namespace {

const detail::KernelTable& table(Isa isa)
{
#if defined(UWAKE_HAVE_AVX2)
    if (isa == Isa::Avx2 && isa_supported(Isa::Avx2)) return detail::kAvx2Table;
#endif
    (void)isa;
    return detail::kScalarTable;
}

void check_sizes(std::size_t in, std::size_t out)
{
    if (in != out) throw DomainError("kernel output span size mismatch");
}

}  // namespace

std::string_view to_string(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(UWAKE_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa best_isa() noexcept
{
    static const Isa best = isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    return best;
}

double evaluate(const LogDistanceLaw& law, double distance_m) noexcept
{
    double out = 0.0;
    detail::kScalarTable.log_distance(law, &distance_m, &out, 1);
    return out;
}

void evaluate(const LogDistanceLaw& law, std::span<const double> distance_m, std::span<double> out,
              Isa isa)
{
    check_sizes(distance_m.size(), out.size());
    table(isa).log_distance(law, distance_m.data(), out.data(), distance_m.size());
}

void lifetime_hours(const LifetimeLaw& law, std::span<const double> rate_per_hour,
                    std::span<double> out, Isa isa)
{
    check_sizes(rate_per_hour.size(), out.size());
    table(isa).lifetime(law, rate_per_hour.data(), out.data(), rate_per_hour.size());
}

void log10(std::span<const double> x, std::span<double> out, Isa isa)
{
    check_sizes(x.size(), out.size());
    table(isa).log10(x.data(), out.data(), x.size());
}

}  // namespace uwake::kernels

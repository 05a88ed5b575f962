// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Batch kernels for sweeps over distance and rate grids. Each kernel has a
// scalar reference implementation and, where the CPU supports it, an AVX2
// variant selected at runtime. Variants agree to ~1e-12 dB (see tests).

namespace uwake::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
/// Widest ISA supported by the running CPU and compiled into this build.
Isa best_isa() noexcept;

/// Received level in dB as a function of distance d (m):
///
///   base_db + min(cap_db, geometric_db - log_slope_db * log10(d)) - linear_db_per_m * d
///
/// All three link kinds reduce to this form. -inf is allowed in base_db and
/// geometric_db (zero captured power) and +inf in cap_db (no cap).
struct LogDistanceLaw {
    double base_db = 0.0;
    double geometric_db = 0.0;
    double cap_db = 0.0;
    double log_slope_db = 0.0;
    double linear_db_per_m = 0.0;
};

/// Closed-form lifetime over a grid of transmissions-per-hour rates.
/// out = capacity_mah / (f * active_ma + (1 - f) * sleep_ma), f = rate * active_s / 3600.
/// Rates must already satisfy 0 <= rate * active_s <= 3600.
struct LifetimeLaw {
    double capacity_mah = 0.0;
    double active_ma = 0.0;
    double sleep_ma = 0.0;
    double active_s = 0.0;
};

double evaluate(const LogDistanceLaw& law, double distance_m) noexcept;

void evaluate(const LogDistanceLaw& law, std::span<const double> distance_m, std::span<double> out,
              Isa isa = best_isa());

void lifetime_hours(const LifetimeLaw& law, std::span<const double> rate_per_hour,
                    std::span<double> out, Isa isa = best_isa());

/// Elementwise log10; exposed for the equivalence tests.
void log10(std::span<const double> x, std::span<double> out, Isa isa = best_isa());

}  // namespace uwake::kernels

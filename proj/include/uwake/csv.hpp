// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "uwake/sim.hpp"

namespace uwake::csv {

/// Plain decimal (never exponent form) with 6 significant digits.
/// Infinities print as "inf" / "-inf".
std::string format_sig6(double v);

/// Header `distance_m,rx_power_dbm`.
void write_range_sweep(std::ostream& out, std::span<const double> distance_m,
                       std::span<const double> rx_power_dbm);

void write_lifetime_header(std::ostream& out);
/// Rows `tx_per_hour,lifetime_h,policy` for one policy block.
void write_lifetime_rows(std::ostream& out, std::span<const double> tx_per_hour,
                         std::span<const double> lifetime_h, std::string_view policy);

/// Header `time_s,actor,kind,detail`; times printed exactly to the nanosecond.
void write_events(std::ostream& out, const sim::SimReport& report);

/// Header `address,wakes,charge_consumed_mah,mean_latency_s,failures`.
void write_summary(std::ostream& out, const sim::SimReport& report);

}  // namespace uwake::csv

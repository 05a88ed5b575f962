// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "uwake/errors.hpp"

namespace uwake::csv {

std::string format_sig6(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0.00000";

    // Round to 6 significant digits first so the decimal count follows the
    // rounded magnitude (999999.7 -> 1000000, not 999999.7 printed with 0 decimals).
    char sci[32];
    std::snprintf(sci, sizeof sci, "%.5e", v);
    const double rounded = std::strtod(sci, nullptr);
    const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(rounded))));
    const int decimals = exponent >= 5 ? 0 : 5 - exponent;

    char buf[400];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
    return buf;
}

void write_range_sweep(std::ostream& out, std::span<const double> distance_m,
                       std::span<const double> rx_power_dbm)
{
    if (distance_m.size() != rx_power_dbm.size()) throw DomainError("sweep column length mismatch");
    out << "distance_m,rx_power_dbm\n";
    for (std::size_t i = 0; i < distance_m.size(); ++i)
        out << format_sig6(distance_m[i]) << ',' << format_sig6(rx_power_dbm[i]) << '\n';
}

void write_lifetime_header(std::ostream& out) { out << "tx_per_hour,lifetime_h,policy\n"; }

void write_lifetime_rows(std::ostream& out, std::span<const double> tx_per_hour,
                         std::span<const double> lifetime_h, std::string_view policy)
{
    if (tx_per_hour.size() != lifetime_h.size()) throw DomainError("sweep column length mismatch");
    for (std::size_t i = 0; i < tx_per_hour.size(); ++i)
        out << format_sig6(tx_per_hour[i]) << ',' << format_sig6(lifetime_h[i]) << ',' << policy << '\n';
}

namespace {

std::string exact_seconds(sim::SimTime t)
{
    const std::int64_t ns = t.ns();
    const std::int64_t whole = ns / 1'000'000'000;
    const std::int64_t frac = ns % 1'000'000'000;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%lld.%09lld", ns < 0 ? "-" : "", std::llabs(whole), std::llabs(frac));
    return buf;
}

}  // namespace

void write_events(std::ostream& out, const sim::SimReport& report)
{
    out << "time_s,actor,kind,detail\n";
    for (const auto& e : report.events)
        out << exact_seconds(e.time) << ',' << e.actor << ',' << e.kind << ',' << e.detail << '\n';
}

void write_summary(std::ostream& out, const sim::SimReport& report)
{
    out << "address,wakes,charge_consumed_mah,mean_latency_s,failures\n";
    for (const auto& n : report.nodes)
        out << n.address << ',' << n.wakes << ',' << format_sig6(n.charge_consumed_mah) << ','
            << format_sig6(n.mean_latency_s()) << ',' << n.failures << '\n';
}

}  // namespace uwake::csv

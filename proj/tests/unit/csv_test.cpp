// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "uwake/csv.hpp"
#include "uwake/errors.hpp"

using namespace uwake;

TEST_CASE("six significant digits, plain decimal")
{
    CHECK(csv::format_sig6(252.2318) == "252.232");
    CHECK(csv::format_sig6(-69.0) == "-69.0000");
    CHECK(csv::format_sig6(1.0) == "1.00000");
    CHECK(csv::format_sig6(0.0) == "0.00000");
    CHECK(csv::format_sig6(0.0151347) == "0.0151347");
    CHECK(csv::format_sig6(62769.57) == "62769.6");
    CHECK(csv::format_sig6(123456789.0) == "123457000");
    CHECK(csv::format_sig6(999999.7) == "1000000");
    CHECK(csv::format_sig6(9.999996) == "10.0000");
    CHECK(csv::format_sig6(1e-7) == "0.000000100000");
    CHECK(csv::format_sig6(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(csv::format_sig6(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(csv::format_sig6(std::nan("")) == "nan");
}

TEST_CASE("sig6 parses back within half a unit in the sixth digit")
{
    for (double v = 1e-6; v < 1e9; v *= 1.37) {
        const double back = std::stod(csv::format_sig6(v));
        CHECK(std::fabs(back - v) <= 5e-6 * v);
    }
}

TEST_CASE("range sweep layout")
{
    std::ostringstream out;
    const std::vector<double> d{1, 2};
    const std::vector<double> p{-3.5, std::numeric_limits<double>::infinity() * -1};
    csv::write_range_sweep(out, d, p);
    CHECK(out.str() == "distance_m,rx_power_dbm\n1.00000,-3.50000\n2.00000,-inf\n");
    const std::vector<double> short_col{1};
    CHECK_THROWS_AS(csv::write_range_sweep(out, d, short_col), DomainError);
}

TEST_CASE("lifetime layout")
{
    std::ostringstream out;
    csv::write_lifetime_header(out);
    const std::vector<double> r{0, 1};
    const std::vector<double> h{1900, 62769.57};
    csv::write_lifetime_rows(out, r, h, "od");
    CHECK(out.str() == "tx_per_hour,lifetime_h,policy\n0.00000,1900.00,od\n1.00000,62769.6,od\n");
}

TEST_CASE("events and summary layout")
{
    sim::SimReport report;
    report.events.push_back({sim::SimTime::from_ns(66'666'834), "node:1", "wake", ""});
    report.events.push_back({sim::SimTime::from_seconds(600), "uav", "wake_request", "target=2"});
    sim::NodeReport n;
    n.address = 1;
    n.wakes = 1;
    n.charge_consumed_mah = 0.015;
    n.wake_latencies_s = {0.0666668};
    report.nodes.push_back(n);
    sim::NodeReport idle;
    idle.address = 2;
    idle.failures = 1;
    report.nodes.push_back(idle);

    std::ostringstream events;
    csv::write_events(events, report);
    CHECK(events.str() == "time_s,actor,kind,detail\n0.066666834,node:1,wake,\n600.000000000,uav,wake_request,target=2\n");

    std::ostringstream summary;
    csv::write_summary(summary, report);
    CHECK(summary.str() ==
          "address,wakes,charge_consumed_mah,mean_latency_s,failures\n1,1,0.0150000,0.0666668,0\n2,0,0.00000,0.00000,1\n");
}

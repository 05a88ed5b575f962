// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include <doctest.h>

#include "uwake/energy.hpp"
#include "uwake/errors.hpp"

using namespace uwake;

namespace {

const EnergyProfile kAcoustic = default_energy_profile(Technology::Acoustic);
const EnergyProfile kOptical = default_energy_profile(Technology::Optical);
const EnergyProfile kMi = default_energy_profile(Technology::Mi);

}  // namespace

TEST_CASE("published profiles")
{
    CHECK(kAcoustic == EnergyProfile{950.0, 0.5, 0.015, 1.0});
    CHECK(kOptical == EnergyProfile{950.0, 3.6, 0.083, 1.0});
    CHECK(kMi == EnergyProfile{950.0, 0.49, 0.043, 1.0});
}

TEST_CASE("average current")
{
    // (1 * 0.5 + 3599 * 0.015) / 3600 and (5 * 0.5 + 3595 * 0.015) / 3600
    CHECK(average_current(kAcoustic, WakePolicy::on_demand(1)) == doctest::Approx(0.015134722222222221).epsilon(1e-14));
    CHECK(average_current(kAcoustic, WakePolicy::duty_cycle(5)) == doctest::Approx(0.01567361111111111).epsilon(1e-14));
    CHECK(average_current(kAcoustic, WakePolicy::no_wakeup()) == 0.5);
    for (const auto& p : {kAcoustic, kOptical, kMi})
        CHECK(average_current(p, WakePolicy::duty_cycle(3600.0 / p.active_duration_s)) == p.active_current_ma);
}

TEST_CASE("lifetime closed forms")
{
    CHECK(lifetime_hours(kAcoustic, WakePolicy::no_wakeup()) == 1900.0);
    CHECK(lifetime_hours(kAcoustic, WakePolicy::on_demand(1)) == doctest::Approx(62769.56960631367).epsilon(1e-12));
    CHECK(lifetime_hours(kOptical, WakePolicy::no_wakeup()) == doctest::Approx(263.88888888888886).epsilon(1e-14));
    // 950 / ((3.6 + 3599 * 0.083) / 3600)
    CHECK(lifetime_hours(kOptical, WakePolicy::on_demand(1)) == doctest::Approx(11312.628796925079).epsilon(1e-12));
}

TEST_CASE("policy ordering and equivalence")
{
    for (const auto& p : {kAcoustic, kOptical, kMi}) {
        const double none = lifetime_hours(p, WakePolicy::no_wakeup());
        const double dc = lifetime_hours(p, WakePolicy::duty_cycle(5));
        const double od = lifetime_hours(p, WakePolicy::on_demand(1));
        CHECK(none < dc);
        CHECK(dc < od);
    }

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> rate(0.0, 3600.0);
    for (int i = 0; i < 1000; ++i) {
        const double n = rate(rng);
        for (const auto& p : {kAcoustic, kOptical, kMi}) {
            CHECK(lifetime_hours(p, WakePolicy::duty_cycle(n)) == lifetime_hours(p, WakePolicy::on_demand(n)));
            const double avg = average_current(p, WakePolicy::on_demand(n));
            CHECK(avg >= p.sleep_current_ma);
            CHECK(avg <= p.active_current_ma);
        }
    }
}

TEST_CASE("lifetime is strictly decreasing in rate and currents")
{
    double prev = lifetime_hours(kMi, WakePolicy::on_demand(0));
    for (double n = 0.25; n <= 3600.0; n *= 1.5) {
        const double l = lifetime_hours(kMi, WakePolicy::on_demand(n));
        CHECK(l < prev);
        prev = l;
    }
    EnergyProfile hungrier = kMi;
    hungrier.sleep_current_ma *= 1.1;
    CHECK(lifetime_hours(hungrier, WakePolicy::on_demand(3)) < lifetime_hours(kMi, WakePolicy::on_demand(3)));
    hungrier = kMi;
    hungrier.active_current_ma *= 1.1;
    CHECK(lifetime_hours(hungrier, WakePolicy::on_demand(3)) < lifetime_hours(kMi, WakePolicy::on_demand(3)));
}

TEST_CASE("active charge ratio")
{
    CHECK(active_charge_ratio(kAcoustic, WakePolicy::duty_cycle(5), WakePolicy::on_demand(1)) == 5.0);
    CHECK(active_charge_ratio(kAcoustic, WakePolicy::duty_cycle(7), WakePolicy::on_demand(7)) == 1.0);
    CHECK(active_charge_ratio(kAcoustic, WakePolicy::duty_cycle(10), WakePolicy::on_demand(2)) == 5.0);
    CHECK_THROWS_AS(active_charge_ratio(kAcoustic, WakePolicy::duty_cycle(5), WakePolicy::on_demand(0)), PolicyError);
    CHECK_THROWS_AS(active_charge_ratio(kAcoustic, WakePolicy::on_demand(5), WakePolicy::duty_cycle(1)), PolicyError);
}

TEST_CASE("policy and profile errors")
{
    CHECK_THROWS_AS(average_current(kAcoustic, WakePolicy::on_demand(3601)), PolicyError);
    CHECK_THROWS_AS(average_current(kAcoustic, WakePolicy::duty_cycle(-1)), PolicyError);
    EnergyProfile half_second = kAcoustic;
    half_second.active_duration_s = 0.5;
    CHECK_NOTHROW(average_current(half_second, WakePolicy::on_demand(7200)));
    CHECK_THROWS_AS(validate(EnergyProfile{950.0, 0.01, 0.015, 1.0}), DomainError);
    CHECK_THROWS_AS(validate(EnergyProfile{0.0, 0.5, 0.015, 1.0}), DomainError);
}

TEST_CASE("batch lifetime equals the closed form")
{
    std::vector<double> rates;
    for (double n = 0.0; n <= 3600.0; n += 7.5) rates.push_back(n);
    for (const auto kind : {WakePolicy::Kind::NoWakeup, WakePolicy::Kind::DutyCycle, WakePolicy::Kind::OnDemand}) {
        std::vector<double> out(rates.size());
        lifetime_hours(kOptical, kind, rates, out);
        for (std::size_t i = 0; i < rates.size(); ++i)
            CHECK(out[i] == lifetime_hours(kOptical, WakePolicy{kind, rates[i]}));
    }
    std::vector<double> bad{4000.0};
    std::vector<double> out(1);
    CHECK_THROWS_AS(lifetime_hours(kOptical, WakePolicy::Kind::OnDemand, bad, out), PolicyError);
}

// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <doctest.h>

#include "uwake/errors.hpp"
#include "uwake/sim.hpp"

using namespace uwake;
using namespace uwake::sim;

namespace {

Node make_node(Address address, Technology tech, Position3D pos)
{
    Node n;
    n.address = address;
    n.position = pos;
    n.link = default_link(tech);
    n.sensitivity = technology_profile(tech).default_sensitivity;
    n.energy = default_energy_profile(tech);
    return n;
}

SimConfig single(Technology tech, double depth, Address target = 1)
{
    SimConfig c;
    c.uav = Uav{Position3D{0, 0, -30}, 300};
    c.buoys.push_back(Buoy{1, Position3D{}, {tech}, false, PowerDbm{-90}});
    c.nodes.push_back(make_node(1, tech, Position3D{0, 0, depth}));
    c.wake_requests.push_back(WakeRequest{0.0, target});
    c.horizon_s = 10.0;
    return c;
}

double rf_delay(const SimConfig& c) { return distance(c.uav.position, c.buoys.front().position) / kSpeedOfLight; }

void check_conservation(const SimConfig& c, const SimReport& r)
{
    for (const auto& node : c.nodes) {
        const NodeReport* nr = r.node(node.address);
        REQUIRE(nr != nullptr);
        const double formula = node.energy.sleep_current_ma * nr->sleep_time.seconds() / 3600.0 +
                               node.energy.active_current_ma * nr->active_time.seconds() / 3600.0;
        CHECK(nr->charge_consumed_mah == formula);
        CHECK(std::fabs(node.energy.battery_capacity_mah - nr->remaining_charge_mah - nr->charge_consumed_mah) <= 1e-9);
        CHECK(nr->remaining_charge_mah >= 0.0);
        CHECK(nr->remaining_charge_mah <= node.energy.battery_capacity_mah);
    }
}

}  // namespace

TEST_CASE("SimTime rounding")
{
    CHECK(SimTime::from_seconds(1.5).ns() == 1'500'000'000);
    CHECK(SimTime::from_seconds(1e-9 * 0.4).ns() == 0);
    CHECK(SimTime::from_seconds_ceil(1e-9 * 0.4).ns() == 1);
    CHECK(SimTime::from_ns(5) + SimTime::from_ns(7) == SimTime::from_ns(12));
    CHECK_THROWS_AS(SimTime::from_seconds(NAN), DomainError);
}

TEST_CASE("matched in-range acoustic wake")
{
    const SimConfig c = single(Technology::Acoustic, 100.0);
    const SimReport r = run(c);
    const NodeReport& n = *r.node(1);
    CHECK(n.wakes == 1);
    REQUIRE(n.wake_latencies_s.size() == 1);
    // RF hop plus 100 m at 1500 m/s
    CHECK(n.wake_latencies_s[0] == doctest::Approx(rf_delay(c) + 100.0 / 1500.0).epsilon(1e-8));
    CHECK(n.failures == 0);
    CHECK(n.active_time == SimTime::from_seconds(1.0));
    CHECK(n.final_state == NodeState::Sleep);
    check_conservation(c, r);
}

TEST_CASE("address mismatch leaves the node asleep")
{
    const SimConfig c = single(Technology::Acoustic, 100.0, 2);
    const SimReport r = run(c);
    CHECK(r.node(1)->wakes == 0);
    CHECK(r.node(1)->failures == 1);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].reason == FailureReason::AddressMismatch);
    CHECK(r.failures[0].node == Address{1});
    CHECK(r.node(1)->active_time == SimTime{});
    check_conservation(c, r);
}

TEST_CASE("out-of-range node stays asleep even when addressed")
{
    for (const auto& [tech, depth] : {std::pair{Technology::Acoustic, 300.0}, std::pair{Technology::Optical, 85.0},
                                      std::pair{Technology::Mi, 50.0}}) {
        const SimConfig c = single(tech, depth);
        const SimReport r = run(c);
        CHECK(r.node(1)->wakes == 0);
        REQUIRE(r.failures.size() == 1);
        CHECK(r.failures[0].reason == FailureReason::OutOfRange);
        CHECK(r.node(1)->final_state == NodeState::Sleep);
    }
}

TEST_CASE("UAV out of RF range: nothing happens downstream")
{
    for (const bool rf_wus : {true, false}) {
        SimConfig c = single(Technology::Acoustic, 100.0);
        c.buoys[0].rf_wakeup_enabled = rf_wus;
        c.uav.position = Position3D{1000, 0, -30};
        const SimReport r = run(c);
        CHECK(r.node(1)->wakes == 0);
        CHECK(r.node(1)->failures == 0);
        REQUIRE(r.failures.size() == 1);
        CHECK_FALSE(r.failures[0].node.has_value());
        CHECK(r.failures[0].reason == FailureReason::OutOfRange);
        for (const auto& e : r.events) CHECK(e.actor == "uav");
    }
}

TEST_CASE("buoy RF wake-up tier adds one RF hop")
{
    SimConfig c = single(Technology::Optical, 20.0);
    const double base = run(c).node(1)->wake_latencies_s.at(0);
    c.buoys[0].rf_wakeup_enabled = true;
    const double tiered = run(c).node(1)->wake_latencies_s.at(0);
    CHECK(tiered - base == doctest::Approx(1e-7).epsilon(1e-3));
}

TEST_CASE("acoustic wakes are slower than optical and MI at equal geometry")
{
    for (const double depth : {5.0, 10.0, 20.0, 30.0}) {
        auto latency = [depth](Technology t) {
            SimConfig c = single(t, depth);
            return run(c).node(1)->wake_latencies_s.at(0);
        };
        const double a = latency(Technology::Acoustic);
        const double o = latency(Technology::Optical);
        const double m = latency(Technology::Mi);
        CHECK(a > o);
        CHECK(o == m);
    }
}

TEST_CASE("a WuS below sensitivity never wakes a node")
{
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> depth(1.0, 400.0);
    std::uniform_real_distribution<double> sens(-80.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const Technology tech = static_cast<Technology>(i % 3);
        SimConfig c = single(tech, depth(rng));
        c.nodes[0].sensitivity = PowerDbm{sens(rng)};
        const SimReport r = run(c);
        const double d = distance(c.buoys[0].position, c.nodes[0].position);
        const bool audible = received_power_clamped(c.nodes[0].link, d) >= c.nodes[0].sensitivity;
        CHECK(r.node(1)->wakes == (audible ? 1u : 0u));
        check_conservation(c, r);
    }
}

TEST_CASE("WuS arriving at an active node is ignored")
{
    SimConfig c = single(Technology::Optical, 10.0);
    c.wake_requests.push_back(WakeRequest{0.5, 1});
    const SimReport r = run(c);
    CHECK(r.node(1)->wakes == 1);
    CHECK(r.failures.empty());
    bool saw_ignored = false;
    for (const auto& e : r.events) saw_ignored |= e.kind == "wus_ignored";
    CHECK(saw_ignored);
}

TEST_CASE("back-to-back wakes at the active duration period are all served")
{
    SimConfig c = single(Technology::Mi, 10.0);
    c.wake_requests.clear();
    for (int k = 0; k < 9; ++k) c.wake_requests.push_back(WakeRequest{static_cast<double>(k), 1});
    const SimReport r = run(c);
    CHECK(r.node(1)->wakes == 9);
}

TEST_CASE("event log is time ordered and runs are deterministic")
{
    SimConfig c;
    c.uav = Uav{Position3D{0, 0, -20}, 500};
    c.buoys.push_back(Buoy{1, Position3D{}, {Technology::Acoustic, Technology::Optical, Technology::Mi}, false, PowerDbm{-90}});
    c.buoys.push_back(Buoy{2, Position3D{300, 0, 0}, {Technology::Acoustic}, true, PowerDbm{-90}});
    c.nodes.push_back(make_node(10, Technology::Acoustic, Position3D{0, 0, 120}));
    c.nodes.push_back(make_node(11, Technology::Optical, Position3D{5, 0, 40}));
    c.nodes.push_back(make_node(12, Technology::Mi, Position3D{0, 5, 30}));
    c.nodes.push_back(make_node(13, Technology::Acoustic, Position3D{300, 0, 50}));
    for (int k = 0; k < 40; ++k) c.wake_requests.push_back(WakeRequest{k * 7.5, static_cast<Address>(10 + k % 5)});
    c.horizon_s = 400.0;

    const SimReport a = run(c);
    const SimReport b = run(c);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.events.size(); ++i) CHECK(a.events[i - 1].time <= a.events[i].time);
    check_conservation(c, a);
    // requests for 13 are served by the nearest buoy (id 1), which is too far away
    CHECK(a.node(13)->wakes == 0);
    CHECK(a.node(10)->wakes == 8);
}

TEST_CASE("nearest buoy in range serves the request")
{
    SimConfig c = single(Technology::Acoustic, 50.0);
    c.buoys.push_back(Buoy{7, Position3D{400, 0, 0}, {Technology::Acoustic}, false, PowerDbm{-90}});
    c.nodes[0].position = Position3D{400, 0, 50};
    c.uav.position = Position3D{350, 0, -30};
    const SimReport r = run(c);
    CHECK(r.node(1)->wakes == 1);
    bool from7 = false;
    for (const auto& e : r.events) from7 |= e.actor == "buoy:7" && e.kind == "wus_emit";
    CHECK(from7);
}

TEST_CASE("depletion makes a node inert")
{
    SimConfig c = single(Technology::Optical, 10.0);
    c.nodes[0].energy.battery_capacity_mah = 0.002;  // 2 s at 3.6 mA
    c.wake_requests = {{0.0, 1}, {1.5, 1}, {5.0, 1}};
    c.horizon_s = 10.0;
    const SimReport r = run(c);
    const NodeReport& n = *r.node(1);
    REQUIRE(n.depleted_at.has_value());
    CHECK(n.remaining_charge_mah == 0.0);
    CHECK(n.wakes == 2);
    CHECK(std::fabs(n.charge_consumed_mah - 0.002) <= 1e-9);
    REQUIRE(!r.failures.empty());
    CHECK(r.failures.back().reason == FailureReason::Depleted);
    check_conservation(c, r);
}

TEST_CASE("empty request list consumes sleep current only")
{
    SimConfig c = single(Technology::Acoustic, 100.0);
    c.wake_requests.clear();
    c.horizon_s = 7200.0;
    const SimReport r = run(c);
    CHECK(r.node(1)->charge_consumed_mah == 0.015 * 7200.0 / 3600.0);
    CHECK(r.events.empty());
}

TEST_CASE("policy variants")
{
    SimConfig c = single(Technology::Acoustic, 100.0);
    c.horizon_s = 3600.0;
    c.policy = WakePolicy::no_wakeup();
    SimReport r = run(c);
    CHECK(r.node(1)->active_time == SimTime::from_seconds(3600.0));
    CHECK(r.node(1)->charge_consumed_mah == doctest::Approx(0.5));
    CHECK(r.node(1)->wakes == 0);

    c.policy = WakePolicy::duty_cycle(5);
    r = run(c);
    CHECK(r.node(1)->wakes == 5);
    CHECK(r.node(1)->active_time == SimTime::from_seconds(5.0));
    CHECK(r.node(1)->charge_consumed_mah == doctest::Approx(0.01567361111111111).epsilon(1e-12));
    check_conservation(c, r);
}

TEST_CASE("config validation")
{
    SimConfig c = single(Technology::Acoustic, 100.0);
    c.nodes.push_back(c.nodes[0]);
    CHECK_THROWS_AS(run(c), ValidationError);

    c = single(Technology::Acoustic, -5.0);
    CHECK_THROWS_WITH_AS(run(c), doctest::Contains("node above surface"), ValidationError);

    c = single(Technology::Acoustic, 100.0);
    c.buoys[0].position.z = 1.0;
    CHECK_THROWS_AS(run(c), ConfigError);

    c = single(Technology::Acoustic, 100.0);
    c.uav.position.z = 10.0;
    CHECK_THROWS_AS(run(c), ValidationError);

    c = single(Technology::Acoustic, 100.0);
    c.horizon_s = 0.0;
    CHECK_THROWS_AS(run(c), ValidationError);

    c = single(Technology::Acoustic, 100.0);
    c.policy = WakePolicy::duty_cycle(5000);
    CHECK_THROWS_AS(run(c), ValidationError);
}

TEST_CASE("simulated lifetime matches the closed form")
{
    for (const Technology tech : {Technology::Acoustic, Technology::Optical, Technology::Mi}) {
        const Node node = make_node(1, tech, Position3D{0, 0, 10});
        const EnergyProfile& e = node.energy;
        for (const double rate : {0.0, 1.0, 5.0, 3600.0 / e.active_duration_s}) {
            const double simulated = simulate_lifetime(node, rate, 200.0);
            const double closed = lifetime_hours(e, WakePolicy::on_demand(rate));
            CHECK_MESSAGE(std::fabs(simulated - closed) <= 0.01 * closed, to_string(tech) << " rate " << rate);
        }
    }
    const Node optical = make_node(1, Technology::Optical, Position3D{0, 0, 10});
    CHECK(simulate_lifetime(optical, 3600.0, 400.0) == doctest::Approx(950.0 / 3.6).epsilon(1e-6));
    CHECK_THROWS_AS(simulate_lifetime(optical, 4000.0, 10.0), PolicyError);
}

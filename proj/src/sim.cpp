// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "uwake/errors.hpp"

namespace uwake::sim {

SimTime SimTime::from_seconds(double s)
{
    if (!std::isfinite(s)) throw DomainError("simulation time must be finite");
    return SimTime{std::llround(s * 1e9)};
}

SimTime SimTime::from_seconds_ceil(double s)
{
    if (!std::isfinite(s)) throw DomainError("simulation time must be finite");
    return SimTime{static_cast<std::int64_t>(std::ceil(s * 1e9))};
}

std::string_view to_string(FailureReason r) noexcept
{
    switch (r) {
    case FailureReason::OutOfRange: return "OUT_OF_RANGE";
    case FailureReason::AddressMismatch: return "ADDRESS_MISMATCH";
    case FailureReason::Depleted: return "DEPLETED";
    }
    return "UNKNOWN";
}

double NodeReport::mean_latency_s() const noexcept
{
    if (wake_latencies_s.empty()) return 0.0;
    return std::accumulate(wake_latencies_s.begin(), wake_latencies_s.end(), 0.0) /
           static_cast<double>(wake_latencies_s.size());
}

const NodeReport* SimReport::node(Address address) const noexcept
{
    for (const auto& n : nodes)
        if (n.address == address) return &n;
    return nullptr;
}

void validate(const SimConfig& c)
{
    if (!(c.horizon_s > 0.0) || !std::isfinite(c.horizon_s))
        throw ValidationError("horizon must be positive");
    try {
        uwake::validate(c.medium);
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
    if (!c.uav.position.is_finite()) throw ValidationError("uav position must be finite");
    if (!(c.uav.position.z < 0.0)) throw ValidationError("uav must be above the surface (z < 0)");
    if (!(c.uav.rf_range_m > 0.0) || !std::isfinite(c.uav.rf_range_m))
        throw ValidationError("uav rf range must be positive");

    std::set<std::uint32_t> buoy_ids;
    for (const auto& b : c.buoys) {
        if (!buoy_ids.insert(b.id).second)
            throw ValidationError("duplicate buoy id " + std::to_string(b.id));
        if (!b.position.is_finite()) throw ValidationError("buoy position must be finite");
        if (b.position.z != 0.0) throw ValidationError("buoy must sit on the surface (z = 0)");
        std::set<Technology> techs(b.transmitters.begin(), b.transmitters.end());
        if (techs.size() != b.transmitters.size())
            throw ValidationError("buoy " + std::to_string(b.id) + " lists a transmitter twice");
    }

    std::set<Address> addresses;
    for (const auto& n : c.nodes) {
        const std::string who = "node " + std::to_string(n.address);
        if (!addresses.insert(n.address).second) throw ValidationError("duplicate address " + std::to_string(n.address));
        if (!n.position.is_finite()) throw ValidationError(who + " position must be finite");
        if (!(n.position.z > 0.0)) throw ValidationError("node above surface: " + who + " needs z > 0");
        if (!std::isfinite(n.sensitivity.value)) throw ValidationError(who + " sensitivity must be finite");
        if (const auto* a = std::get_if<acoustic::AcousticLinkParams>(&n.link); a && a->medium != c.medium)
            throw ValidationError(who + ": acoustic link medium differs from the scenario medium");
        try {
            uwake::validate(n.link);
            uwake::validate(n.energy, c.policy);
        } catch (const Error& e) {
            throw ValidationError(who + ": " + e.what());
        }
    }

    for (const auto& r : c.wake_requests)
        if (!(r.time_s >= 0.0) || !std::isfinite(r.time_s))
            throw ValidationError("wake request time must be >= 0");
}

namespace {

enum class EventKind { ActiveEnd, Depletion, RfArrival, WusArrival, RequestIssue, WusEmit, DutyWake };

// Same-time ordering: state transitions, then arrivals, then emissions.
int priority(EventKind k)
{
    switch (k) {
    case EventKind::ActiveEnd:
    case EventKind::Depletion: return 0;
    case EventKind::RfArrival:
    case EventKind::WusArrival: return 1;
    case EventKind::RequestIssue:
    case EventKind::WusEmit:
    case EventKind::DutyWake: return 2;
    }
    return 3;
}

constexpr std::uint64_t kUavActor = 0;
std::uint64_t buoy_actor(std::uint32_t id) { return (std::uint64_t{1} << 32) | id; }
std::uint64_t node_actor(Address a) { return (std::uint64_t{2} << 32) | a; }

struct Event {
    SimTime time;
    int prio = 0;
    std::uint64_t actor = 0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::RequestIssue;
    std::size_t request = 0;  // index into the sorted request list
    std::size_t buoy = 0;
    std::size_t node = 0;
    std::uint64_t generation = 0;

    auto key() const { return std::tie(time, prio, actor, seq); }
};

struct Later {
    bool operator()(const Event& a, const Event& b) const { return a.key() > b.key(); }
};

struct NodeRuntime {
    const Node* cfg = nullptr;
    NodeState state = NodeState::Sleep;
    bool depleted = false;
    SimTime last_change{};
    std::uint64_t generation = 0;
    NodeReport report;
};

double consumed_mah(const NodeRuntime& rt)
{
    const EnergyProfile& e = rt.cfg->energy;
    return e.sleep_current_ma * rt.report.sleep_time.seconds() / 3600.0 +
           e.active_current_ma * rt.report.active_time.seconds() / 3600.0;
}

class Engine {
public:
    explicit Engine(const SimConfig& config) : cfg_(config), horizon_(SimTime::from_seconds(config.horizon_s))
    {
        requests_ = config.wake_requests;
        std::stable_sort(requests_.begin(), requests_.end(),
                         [](const WakeRequest& a, const WakeRequest& b) { return a.time_s < b.time_s; });

        std::vector<std::size_t> order(config.nodes.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return config.nodes[a].address < config.nodes[b].address;
        });
        for (const std::size_t i : order) {
            NodeRuntime rt;
            rt.cfg = &config.nodes[i];
            rt.report.address = rt.cfg->address;
            nodes_.push_back(std::move(rt));
        }
    }

    SimReport run()
    {
        const bool always_on = cfg_.policy.kind == WakePolicy::Kind::NoWakeup;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (always_on)
                transition(i, SimTime{}, NodeState::Active);
            else
                schedule_depletion(i, SimTime{});
            if (cfg_.policy.kind == WakePolicy::Kind::DutyCycle && cfg_.policy.transmissions_per_hour > 0.0)
                push(SimTime{}, EventKind::DutyWake, node_actor(nodes_[i].cfg->address), [&](Event& e) { e.node = i; });
        }
        if (!requests_.empty()) push_request(0);

        while (!queue_.empty() && queue_.top().time < horizon_) {
            const Event ev = queue_.top();
            queue_.pop();
            dispatch(ev);
        }

        SimReport report;
        report.horizon = horizon_;
        for (auto& rt : nodes_) {
            if (!rt.depleted) settle(rt, horizon_);
            finish(rt);
            report.nodes.push_back(std::move(rt.report));
        }
        report.events = std::move(events_);
        report.failures = std::move(failures_);
        return report;
    }

private:
    template <class Fill>
    void push(SimTime t, EventKind kind, std::uint64_t actor, Fill fill)
    {
        Event e;
        e.time = t;
        e.kind = kind;
        e.prio = priority(kind);
        e.actor = actor;
        e.seq = seq_++;
        fill(e);
        queue_.push(e);
    }

    void push_request(std::size_t index)
    {
        push(SimTime::from_seconds(requests_[index].time_s), EventKind::RequestIssue, kUavActor,
             [&](Event& e) { e.request = index; });
    }

    void log(SimTime t, std::string actor, std::string kind, std::string detail)
    {
        if (cfg_.record_events)
            events_.push_back(EventRecord{t, std::move(actor), std::move(kind), std::move(detail)});
    }

    static std::string node_name(const NodeRuntime& rt) { return "node:" + std::to_string(rt.cfg->address); }
    std::string buoy_name(std::size_t b) const { return "buoy:" + std::to_string(cfg_.buoys[b].id); }

    void fail(SimTime t, std::optional<Address> node, Address target, FailureReason reason)
    {
        failures_.push_back(FailureRecord{t, node, target, reason});
        if (node) {
            for (auto& rt : nodes_)
                if (rt.cfg->address == *node) ++rt.report.failures;
        }
        log(t, node ? "node:" + std::to_string(*node) : "uav", "failure",
            std::string(to_string(reason)) + " target=" + std::to_string(target));
    }

    void settle(NodeRuntime& rt, SimTime now)
    {
        const SimTime elapsed = now - rt.last_change;
        if (rt.state == NodeState::Sleep)
            rt.report.sleep_time += elapsed;
        else
            rt.report.active_time += elapsed;
        rt.last_change = now;
    }

    void schedule_depletion(std::size_t i, SimTime now)
    {
        NodeRuntime& rt = nodes_[i];
        const EnergyProfile& e = rt.cfg->energy;
        const double current = rt.state == NodeState::Sleep ? e.sleep_current_ma : e.active_current_ma;
        const double remaining = e.battery_capacity_mah - consumed_mah(rt);
        const double seconds = std::max(0.0, remaining) * 3600.0 / current;
        if (seconds > (horizon_ - now).seconds() + 1.0) return;  // cannot deplete before the horizon
        const SimTime at = now + SimTime::from_seconds_ceil(seconds);
        push(at, EventKind::Depletion, node_actor(rt.cfg->address), [&](Event& ev) {
            ev.node = i;
            ev.generation = rt.generation;
        });
    }

    void transition(std::size_t i, SimTime now, NodeState next)
    {
        NodeRuntime& rt = nodes_[i];
        settle(rt, now);
        rt.state = next;
        ++rt.generation;
        log(now, node_name(rt), next == NodeState::Active ? "wake" : "sleep", "");
        schedule_depletion(i, now);
    }

    void activate(std::size_t i, SimTime now)
    {
        transition(i, now, NodeState::Active);
        NodeRuntime& rt = nodes_[i];
        ++rt.report.wakes;
        push(now + SimTime::from_seconds(rt.cfg->energy.active_duration_s), EventKind::ActiveEnd,
             node_actor(rt.cfg->address), [&](Event& ev) {
                 ev.node = i;
                 ev.generation = rt.generation;
             });
    }

    void finish(NodeRuntime& rt)
    {
        const double consumed = consumed_mah(rt);
        rt.report.charge_consumed_mah = consumed;
        rt.report.remaining_charge_mah = std::max(0.0, rt.cfg->energy.battery_capacity_mah - consumed);
        rt.report.final_state = rt.state;
    }

    void dispatch(const Event& ev)
    {
        switch (ev.kind) {
        case EventKind::RequestIssue: on_request(ev); break;
        case EventKind::RfArrival: on_rf_arrival(ev); break;
        case EventKind::WusEmit: on_wus_emit(ev); break;
        case EventKind::WusArrival: on_wus_arrival(ev); break;
        case EventKind::ActiveEnd: on_active_end(ev); break;
        case EventKind::Depletion: on_depletion(ev); break;
        case EventKind::DutyWake: on_duty_wake(ev); break;
        }
    }

    void on_request(const Event& ev)
    {
        const WakeRequest& req = requests_[ev.request];
        if (ev.request + 1 < requests_.size()) push_request(ev.request + 1);
        log(ev.time, "uav", "wake_request", "target=" + std::to_string(req.target_address));

        std::optional<std::size_t> chosen;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < cfg_.buoys.size(); ++b) {
            const double d = distance(cfg_.uav.position, cfg_.buoys[b].position);
            if (d > cfg_.uav.rf_range_m) continue;
            if (d < best || (d == best && cfg_.buoys[b].id < cfg_.buoys[*chosen].id)) {
                best = d;
                chosen = b;
            }
        }
        if (!chosen) {
            fail(ev.time, std::nullopt, req.target_address, FailureReason::OutOfRange);
            return;
        }
        const Buoy& buoy = cfg_.buoys[*chosen];
        const SimTime hop = SimTime::from_seconds(best / kSpeedOfLight);
        const SimTime arrival = ev.time + hop + (buoy.rf_wakeup_enabled ? hop : SimTime{});
        log(ev.time, "uav", "rf_send", "buoy=" + std::to_string(buoy.id) +
                                           (buoy.rf_wakeup_enabled ? " rf_wus=1" : ""));
        push(arrival, EventKind::RfArrival, buoy_actor(buoy.id), [&](Event& e) {
            e.request = ev.request;
            e.buoy = *chosen;
        });
    }

    void on_rf_arrival(const Event& ev)
    {
        log(ev.time, buoy_name(ev.buoy), "rf_request_arrival",
            "target=" + std::to_string(requests_[ev.request].target_address));
        push(ev.time, EventKind::WusEmit, buoy_actor(cfg_.buoys[ev.buoy].id), [&](Event& e) {
            e.request = ev.request;
            e.buoy = ev.buoy;
        });
    }

    void on_wus_emit(const Event& ev)
    {
        const Buoy& buoy = cfg_.buoys[ev.buoy];
        const Address target = requests_[ev.request].target_address;
        for (const Technology tech : buoy.transmitters) {
            const WakeUpSignal wus{target, tech, ev.time, buoy.id};
            log(ev.time, buoy_name(ev.buoy), "wus_emit",
                "target=" + std::to_string(wus.target_address) + " tech=" + std::string(to_string(wus.technology)));
            for (std::size_t i = 0; i < nodes_.size(); ++i) {
                const Node& node = *nodes_[i].cfg;
                if (node.technology() != tech) continue;
                const double d = distance(buoy.position, node.position);
                const SimTime delay = SimTime::from_seconds(propagation_delay(technology_profile(tech), d));
                push(wus.emit_time + delay, EventKind::WusArrival, node_actor(node.address), [&](Event& e) {
                    e.request = ev.request;
                    e.buoy = ev.buoy;
                    e.node = i;
                });
            }
        }
    }

    void on_wus_arrival(const Event& ev)
    {
        NodeRuntime& rt = nodes_[ev.node];
        const Node& node = *rt.cfg;
        const WakeRequest& req = requests_[ev.request];
        const std::string name = node_name(rt);

        if (rt.depleted) {
            if (req.target_address == node.address)
                fail(ev.time, node.address, req.target_address, FailureReason::Depleted);
            return;
        }
        if (cfg_.policy.kind == WakePolicy::Kind::DutyCycle) {
            log(ev.time, name, "wus_ignored", "no wake-up receiver under duty cycling");
            return;
        }
        if (rt.state == NodeState::Active) {
            log(ev.time, name, "wus_ignored", "node active");
            return;
        }
        const double d = distance(cfg_.buoys[ev.buoy].position, node.position);
        const PowerDbm rx = received_power_clamped(node.link, d);
        if (rx < node.sensitivity) {
            fail(ev.time, node.address, req.target_address, FailureReason::OutOfRange);
            return;
        }
        if (req.target_address != node.address) {
            fail(ev.time, node.address, req.target_address, FailureReason::AddressMismatch);
            return;
        }
        activate(ev.node, ev.time);
        rt.report.wake_latencies_s.push_back((ev.time - SimTime::from_seconds(req.time_s)).seconds());
    }

    void on_active_end(const Event& ev)
    {
        NodeRuntime& rt = nodes_[ev.node];
        if (rt.depleted || ev.generation != rt.generation) return;
        transition(ev.node, ev.time, NodeState::Sleep);
    }

    void on_depletion(const Event& ev)
    {
        NodeRuntime& rt = nodes_[ev.node];
        if (rt.depleted || ev.generation != rt.generation) return;
        settle(rt, ev.time);
        rt.depleted = true;
        ++rt.generation;
        rt.report.depleted_at = ev.time;
        log(ev.time, node_name(rt), "depleted", "");
    }

    void on_duty_wake(const Event& ev)
    {
        NodeRuntime& rt = nodes_[ev.node];
        if (rt.depleted) return;
        if (rt.state == NodeState::Sleep) activate(ev.node, ev.time);
        const SimTime period = SimTime::from_seconds(3600.0 / cfg_.policy.transmissions_per_hour);
        push(ev.time + period, EventKind::DutyWake, node_actor(rt.cfg->address),
             [&](Event& e) { e.node = ev.node; });
    }

    const SimConfig& cfg_;
    SimTime horizon_;
    std::vector<WakeRequest> requests_;
    std::vector<NodeRuntime> nodes_;
    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    std::uint64_t seq_ = 0;
    std::vector<EventRecord> events_;
    std::vector<FailureRecord> failures_;
};

}  // namespace

SimReport run(const SimConfig& config)
{
    validate(config);
    return Engine(config).run();
}

double simulate_lifetime(const Node& node, double wake_rate_per_hour, double horizon_hours)
{
    if (!(horizon_hours > 0.0) || !std::isfinite(horizon_hours))
        throw ValidationError("lifetime horizon must be positive");
    validate(node.energy, WakePolicy::on_demand(wake_rate_per_hour));

    SimConfig config;
    if (const auto* a = std::get_if<acoustic::AcousticLinkParams>(&node.link)) config.medium = a->medium;
    config.uav = Uav{Position3D{node.position.x, node.position.y, -10.0}, 100.0};
    config.buoys.push_back(Buoy{1, Position3D{node.position.x, node.position.y, 0.0}, {node.technology()}, false,
                                PowerDbm{-90.0}});
    config.nodes.push_back(node);
    config.horizon_s = horizon_hours * 3600.0;
    config.record_events = false;
    if (wake_rate_per_hour > 0.0) {
        const double period_s = 3600.0 / wake_rate_per_hour;
        for (std::uint64_t k = 0;; ++k) {
            const double t = static_cast<double>(k) * period_s;
            if (t >= config.horizon_s) break;
            config.wake_requests.push_back(WakeRequest{t, node.address});
        }
    }

    const SimReport report = run(config);
    const NodeReport& r = report.nodes.front();
    if (r.depleted_at) return r.depleted_at->seconds() / 3600.0;
    return horizon_hours * node.energy.battery_capacity_mah / r.charge_consumed_mah;
}

}  // namespace uwake::sim

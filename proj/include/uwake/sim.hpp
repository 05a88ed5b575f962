// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uwake/core.hpp"
#include "uwake/energy.hpp"
#include "uwake/link.hpp"
#include "uwake/sim_time.hpp"

namespace uwake::sim {

using Address = std::uint16_t;

/// Underwater node with a wake-up receiver. `link` describes the buoy-to-node
/// wake-up link and fixes the node's technology.
struct Node {
    Address address = 0;
    Position3D position{};
    LinkParams link = acoustic::AcousticLinkParams{};
    PowerDbm sensitivity{-10.0};
    EnergyProfile energy{};

    Technology technology() const noexcept { return technology_of(link); }
    friend bool operator==(const Node&, const Node&) = default;
};

/// Surface node relaying UAV requests as underwater wake-up signals.
struct Buoy {
    std::uint32_t id = 0;
    Position3D position{};
    std::vector<Technology> transmitters{Technology::Acoustic};
    /// Buoy sleeps until an RF wake-up signal, adding one RF hop per request.
    bool rf_wakeup_enabled = false;
    PowerDbm rf_sensitivity{-90.0};  // informational; the RF hop is a range disk

    friend bool operator==(const Buoy&, const Buoy&) = default;
};

struct Uav {
    Position3D position{0.0, 0.0, -50.0};
    double rf_range_m = 500.0;

    friend bool operator==(const Uav&, const Uav&) = default;
};

struct WakeRequest {
    double time_s = 0.0;
    Address target_address = 0;

    friend bool operator==(const WakeRequest&, const WakeRequest&) = default;
};

struct SimConfig {
    Medium medium{};
    Uav uav{};
    std::vector<Buoy> buoys;
    std::vector<Node> nodes;
    std::vector<WakeRequest> wake_requests;
    double horizon_s = 60.0;
    WakePolicy policy = WakePolicy::on_demand(0.0);
    /// Off for long lifetime runs where only the ledgers matter.
    bool record_events = true;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Throws ValidationError on duplicate node addresses or buoy ids, a node at
/// or above the surface, a buoy off the surface, a UAV below it, non-positive
/// horizon, or any invalid link/energy parameter.
void validate(const SimConfig& config);

struct WakeUpSignal {
    Address target_address = 0;
    Technology technology = Technology::Acoustic;
    SimTime emit_time{};
    std::uint32_t origin = 0;  // buoy id

    friend bool operator==(const WakeUpSignal&, const WakeUpSignal&) = default;
};

enum class FailureReason { OutOfRange, AddressMismatch, Depleted };

std::string_view to_string(FailureReason r) noexcept;

struct FailureRecord {
    SimTime time{};
    /// Receiving node; empty when the request never left the UAV.
    std::optional<Address> node;
    Address target_address = 0;
    FailureReason reason = FailureReason::OutOfRange;

    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct EventRecord {
    SimTime time{};
    std::string actor;  // "uav", "buoy:<id>", "node:<address>"
    std::string kind;
    std::string detail;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

enum class NodeState { Sleep, Active };

struct NodeReport {
    Address address = 0;
    std::uint64_t wakes = 0;
    double charge_consumed_mah = 0.0;
    double remaining_charge_mah = 0.0;
    SimTime sleep_time{};
    SimTime active_time{};
    std::vector<double> wake_latencies_s;
    std::uint64_t failures = 0;
    NodeState final_state = NodeState::Sleep;
    std::optional<SimTime> depleted_at;

    double mean_latency_s() const noexcept;
    friend bool operator==(const NodeReport&, const NodeReport&) = default;
};

struct SimReport {
    SimTime horizon{};
    std::vector<NodeReport> nodes;  // ascending address
    std::vector<EventRecord> events;  // non-decreasing time
    std::vector<FailureRecord> failures;

    const NodeReport* node(Address address) const noexcept;
    friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Runs the two-stage UAV -> buoy -> node wake-up protocol to the horizon.
/// Protocol outcomes never throw; they are failure records in the report.
SimReport run(const SimConfig& config);

/// Hours until `node` depletes when woken `wake_rate_per_hour` times an hour
/// by a buoy directly above it. If the battery outlasts `horizon_hours`, the
/// result is extrapolated linearly from the charge consumed.
double simulate_lifetime(const Node& node, double wake_rate_per_hour, double horizon_hours);

}  // namespace uwake::sim

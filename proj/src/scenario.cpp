// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uwake/errors.hpp"

namespace uwake {

namespace {

using nlohmann::json;

// Typed access to one JSON object that remembers which keys were read, so
// leftovers can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path))
    {
        if (!j_.is_object()) throw ParseError(where() + ": expected an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& raw(const std::string& key)
    {
        seen_.insert(key);
        if (!j_.contains(key)) throw ParseError(where(key) + ": missing required key");
        return j_.at(key);
    }

    double number(const std::string& key)
    {
        const json& v = raw(key);
        if (!v.is_number()) throw ParseError(where(key) + ": expected a number");
        return v.get<double>();
    }
    double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

    std::int64_t integer(const std::string& key)
    {
        const json& v = raw(key);
        if (!v.is_number_integer()) throw ParseError(where(key) + ": expected an integer");
        return v.get<std::int64_t>();
    }

    bool boolean(const std::string& key, bool fallback)
    {
        if (!has(key)) return fallback;
        const json& v = raw(key);
        if (!v.is_boolean()) throw ParseError(where(key) + ": expected true or false");
        return v.get<bool>();
    }

    std::string string(const std::string& key)
    {
        const json& v = raw(key);
        if (!v.is_string()) throw ParseError(where(key) + ": expected a string");
        return v.get<std::string>();
    }

    Position3D position(const std::string& key)
    {
        const json& v = raw(key);
        if (!v.is_array() || v.size() != 3 || !std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); }))
            throw ParseError(where(key) + ": expected [x, y, z] in meters");
        return Position3D{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    }

    const json& array(const std::string& key)
    {
        const json& v = raw(key);
        if (!v.is_array()) throw ParseError(where(key) + ": expected an array");
        return v;
    }

    ObjectReader object(const std::string& key) { return ObjectReader(raw(key), where(key)); }

    std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
    std::string where() const { return path_.empty() ? "<root>" : path_; }

    void reject_unknown() const
    {
        for (const auto& [key, value] : j_.items())
            if (!seen_.contains(key)) throw ParseError(where(key) + ": unknown key");
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

std::string indexed(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Technology parse_tech(const std::string& s, const std::string& where)
{
    try {
        return technology_from_string(s);
    } catch (const DomainError&) {
        throw ParseError(where + ": unknown technology '" + s + "' (acoustic, optical, mi)");
    }
}

LinkParams parse_link(ObjectReader& r, Technology tech, const Medium& medium)
{
    switch (tech) {
    case Technology::Acoustic: {
        acoustic::AcousticLinkParams p;
        p.source_level_db = r.number("source_level_db", p.source_level_db);
        p.frequency_khz = r.number("freq_khz", p.frequency_khz);
        p.spreading_exponent = r.number("spreading", p.spreading_exponent);
        p.medium = medium;
        return p;
    }
    case Technology::Optical: {
        optical::OpticalLinkParams p;
        p.transmit_power_mw = r.number("power_mw", p.transmit_power_mw);
        p.aperture_area_m2 = r.number("aperture_m2", p.aperture_area_m2);
        p.divergence_half_angle_deg = r.number("divergence_half_deg", p.divergence_half_angle_deg);
        p.misalignment_beta_deg = r.number("beta_deg", p.misalignment_beta_deg);
        if (r.has("water") && r.has("extinction_per_m"))
            throw ParseError(r.where("water") + ": give either water or extinction_per_m, not both");
        if (r.has("water")) {
            const std::string name = r.string("water");
            const auto w = optical::water_type_from_string(name);
            if (!w)
                throw ParseError(r.where("water") + ": unknown water type '" + name +
                                 "' (pure_sea, clear_ocean, coastal, harbor)");
            p.extinction_per_m = optical::extinction_coefficient(*w);
        } else {
            p.extinction_per_m = r.number("extinction_per_m", p.extinction_per_m);
        }
        return p;
    }
    case Technology::Mi: {
        mi::MiLinkParams p;
        p.transmit_power_mw = r.number("power_mw", p.transmit_power_mw);
        p.frequency_khz = r.number("freq_khz", p.frequency_khz);
        p.permeability_h_per_m = r.number("permeability_h_m", p.permeability_h_per_m);
        p.turns_tx = r.number("turns_tx", p.turns_tx);
        p.turns_rx = r.number("turns_rx", p.turns_rx);
        p.coil_radius_tx_m = r.number("radius_tx_m", p.coil_radius_tx_m);
        p.coil_radius_rx_m = r.number("radius_rx_m", p.coil_radius_rx_m);
        p.unit_coil_resistance_ohm_per_m = r.number("coil_resistance_ohm_m", p.unit_coil_resistance_ohm_per_m);
        p.misalignment_beta_deg = r.number("beta_deg", p.misalignment_beta_deg);
        p.calibration_gain_db = r.number("gain_db", p.calibration_gain_db);
        return p;
    }
    }
    return acoustic::AcousticLinkParams{};
}

sim::Node parse_node(ObjectReader& r, const Medium& medium)
{
    sim::Node n;
    const std::int64_t address = r.integer("address");
    if (address < 0 || address > std::numeric_limits<sim::Address>::max())
        throw ValidationError(r.where("address") + ": address must fit in 16 bits");
    n.address = static_cast<sim::Address>(address);
    const Technology tech = parse_tech(r.string("tech"), r.where("tech"));
    n.position = r.position("position");

    if (r.has("link")) {
        ObjectReader link = r.object("link");
        n.link = parse_link(link, tech, medium);
        link.reject_unknown();
    } else {
        const json no_overrides = json::object();
        ObjectReader empty(no_overrides, r.where("link"));
        n.link = parse_link(empty, tech, medium);
    }
    n.sensitivity = PowerDbm{r.number("sensitivity_dbm", technology_profile(tech).default_sensitivity.value)};

    n.energy = default_energy_profile(tech);
    if (r.has("energy")) {
        ObjectReader e = r.object("energy");
        n.energy.battery_capacity_mah = e.number("capacity_mah", n.energy.battery_capacity_mah);
        n.energy.active_current_ma = e.number("active_ma", n.energy.active_current_ma);
        n.energy.sleep_current_ma = e.number("sleep_ma", n.energy.sleep_current_ma);
        n.energy.active_duration_s = e.number("active_s", n.energy.active_duration_s);
        e.reject_unknown();
    }
    return n;
}

sim::Buoy parse_buoy(ObjectReader& r)
{
    sim::Buoy b;
    const std::int64_t id = r.integer("id");
    if (id < 0 || id > std::numeric_limits<std::uint32_t>::max())
        throw ValidationError(r.where("id") + ": buoy id must be a 32-bit unsigned integer");
    b.id = static_cast<std::uint32_t>(id);
    if (r.has("position")) b.position = r.position("position");
    if (r.has("transmitters")) {
        b.transmitters.clear();
        const json& arr = r.array("transmitters");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = indexed(r.where("transmitters"), i);
            if (!arr[i].is_string()) throw ParseError(where + ": expected a technology name");
            b.transmitters.push_back(parse_tech(arr[i].get<std::string>(), where));
        }
    }
    b.rf_wakeup_enabled = r.boolean("rf_wakeup_enabled", b.rf_wakeup_enabled);
    b.rf_sensitivity = PowerDbm{r.number("rf_sensitivity_dbm", b.rf_sensitivity.value)};
    return b;
}

WakePolicy parse_policy(ObjectReader& r)
{
    const std::string kind = r.string("kind");
    if (kind == "nowu") return WakePolicy::no_wakeup();
    const double rate = r.number("rate_per_hour", 0.0);
    if (kind == "dc") return WakePolicy::duty_cycle(rate);
    if (kind == "od") return WakePolicy::on_demand(rate);
    throw ParseError(r.where("kind") + ": unknown policy '" + kind + "' (nowu, dc, od)");
}

std::size_t line_of(std::string_view text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

sim::SimConfig parse_scenario_text(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
    }

    sim::SimConfig c;
    ObjectReader root(doc, "");
    if (root.has("medium")) {
        ObjectReader m = root.object("medium");
        c.medium.water_density = m.number("density_kg_m3", c.medium.water_density);
        c.medium.sound_speed = m.number("sound_speed_m_s", c.medium.sound_speed);
        m.reject_unknown();
    }
    if (root.has("uav")) {
        ObjectReader u = root.object("uav");
        if (u.has("position")) c.uav.position = u.position("position");
        c.uav.rf_range_m = u.number("rf_range_m", c.uav.rf_range_m);
        u.reject_unknown();
    }
    if (root.has("buoys")) {
        const json& buoys = root.array("buoys");
        for (std::size_t i = 0; i < buoys.size(); ++i) {
            ObjectReader b(buoys[i], indexed("buoys", i));
            c.buoys.push_back(parse_buoy(b));
            b.reject_unknown();
        }
    }
    if (root.has("nodes")) {
        const json& nodes = root.array("nodes");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            ObjectReader n(nodes[i], indexed("nodes", i));
            c.nodes.push_back(parse_node(n, c.medium));
            n.reject_unknown();
        }
    }
    if (root.has("wake_requests")) {
        const json& reqs = root.array("wake_requests");
        for (std::size_t i = 0; i < reqs.size(); ++i) {
            ObjectReader w(reqs[i], indexed("wake_requests", i));
            sim::WakeRequest req;
            req.time_s = w.number("time_s");
            const std::int64_t address = w.integer("address");
            if (address < 0 || address > std::numeric_limits<sim::Address>::max())
                throw ValidationError(w.where("address") + ": address must fit in 16 bits");
            req.target_address = static_cast<sim::Address>(address);
            w.reject_unknown();
            c.wake_requests.push_back(req);
        }
    }
    c.horizon_s = root.number("horizon_s", c.horizon_s);
    if (root.has("policy")) {
        ObjectReader p = root.object("policy");
        c.policy = parse_policy(p);
        p.reject_unknown();
    }
    root.reject_unknown();

    sim::validate(c);
    return c;
}

sim::SimConfig parse_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

namespace {

json position_json(const Position3D& p) { return json::array({p.x, p.y, p.z}); }

json link_json(const LinkParams& link)
{
    if (const auto* a = std::get_if<acoustic::AcousticLinkParams>(&link))
        return {{"source_level_db", a->source_level_db}, {"freq_khz", a->frequency_khz},
                {"spreading", a->spreading_exponent}};
    if (const auto* o = std::get_if<optical::OpticalLinkParams>(&link))
        return {{"power_mw", o->transmit_power_mw},
                {"aperture_m2", o->aperture_area_m2},
                {"divergence_half_deg", o->divergence_half_angle_deg},
                {"extinction_per_m", o->extinction_per_m},
                {"beta_deg", o->misalignment_beta_deg}};
    const auto& m = std::get<mi::MiLinkParams>(link);
    return {{"power_mw", m.transmit_power_mw},
            {"freq_khz", m.frequency_khz},
            {"permeability_h_m", m.permeability_h_per_m},
            {"turns_tx", m.turns_tx},
            {"turns_rx", m.turns_rx},
            {"radius_tx_m", m.coil_radius_tx_m},
            {"radius_rx_m", m.coil_radius_rx_m},
            {"coil_resistance_ohm_m", m.unit_coil_resistance_ohm_per_m},
            {"beta_deg", m.misalignment_beta_deg},
            {"gain_db", m.calibration_gain_db}};
}

}  // namespace

std::string serialize_scenario(const sim::SimConfig& c)
{
    json doc;
    doc["medium"] = {{"density_kg_m3", c.medium.water_density}, {"sound_speed_m_s", c.medium.sound_speed}};
    doc["uav"] = {{"position", position_json(c.uav.position)}, {"rf_range_m", c.uav.rf_range_m}};

    json buoys = json::array();
    for (const auto& b : c.buoys) {
        json tx = json::array();
        for (const Technology t : b.transmitters) tx.push_back(std::string(to_string(t)));
        buoys.push_back({{"id", b.id},
                         {"position", position_json(b.position)},
                         {"transmitters", tx},
                         {"rf_wakeup_enabled", b.rf_wakeup_enabled},
                         {"rf_sensitivity_dbm", b.rf_sensitivity.value}});
    }
    doc["buoys"] = buoys;

    json nodes = json::array();
    for (const auto& n : c.nodes) {
        nodes.push_back({{"address", n.address},
                         {"tech", std::string(to_string(n.technology()))},
                         {"position", position_json(n.position)},
                         {"link", link_json(n.link)},
                         {"sensitivity_dbm", n.sensitivity.value},
                         {"energy",
                          {{"capacity_mah", n.energy.battery_capacity_mah},
                           {"active_ma", n.energy.active_current_ma},
                           {"sleep_ma", n.energy.sleep_current_ma},
                           {"active_s", n.energy.active_duration_s}}}});
    }
    doc["nodes"] = nodes;

    json reqs = json::array();
    for (const auto& r : c.wake_requests) reqs.push_back({{"time_s", r.time_s}, {"address", r.target_address}});
    doc["wake_requests"] = reqs;
    doc["horizon_s"] = c.horizon_s;

    json policy = {{"kind", std::string(to_string(c.policy.kind))}};
    if (c.policy.kind != WakePolicy::Kind::NoWakeup) policy["rate_per_hour"] = c.policy.transmissions_per_hour;
    doc["policy"] = policy;
    return doc.dump(2) + "\n";
}

}  // namespace uwake

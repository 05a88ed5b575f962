// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "uwake/csv.hpp"
#include "uwake/energy.hpp"
#include "uwake/errors.hpp"
#include "uwake/link.hpp"
#include "uwake/scenario.hpp"
#include "uwake/sim.hpp"

namespace uwake::cli {

namespace {

// Carries an exit code and the `<code>` token of the error line.
struct CliFailure {
    int exit_code;
    std::string code;
    std::string detail;
};

[[noreturn]] void flag_error(std::string detail) { throw CliFailure{kFlagError, "flag", std::move(detail)}; }

struct LinkFlags {
    std::string tech = "acoustic";
    // acoustic
    std::optional<double> sl_db, spreading, density, sound_speed;
    // shared by acoustic and MI
    std::optional<double> freq_khz;
    // shared by optical and MI
    std::optional<double> power_mw, beta_deg;
    // optical
    std::optional<double> aperture_m2, divergence_half_deg, extinction;
    std::optional<std::string> water;
    // MI
    std::optional<double> turns_tx, turns_rx, radius_tx_m, radius_rx_m, gain_db;

    void add_to(CLI::App& app)
    {
        app.add_option("--tech", tech, "acoustic | optical | mi")
            ->required()
            ->check(CLI::IsMember({"acoustic", "optical", "mi"}));
        app.add_option("--sl-db", sl_db, "acoustic source level, dB re 1 uPa at 1 m");
        app.add_option("--spreading", spreading, "acoustic spreading exponent (10, 15, 20)");
        app.add_option("--density", density, "water density, kg/m^3");
        app.add_option("--sound-speed", sound_speed, "sound speed, m/s");
        app.add_option("--freq-khz", freq_khz, "carrier frequency, kHz (acoustic, mi)");
        app.add_option("--power-mw", power_mw, "transmit power, mW (optical, mi)");
        app.add_option("--beta-deg", beta_deg, "misalignment angle, deg (optical, mi)");
        app.add_option("--aperture-m2", aperture_m2, "optical aperture area, m^2");
        app.add_option("--divergence-half-deg", divergence_half_deg, "optical beam half-angle, deg");
        app.add_option("--extinction", extinction, "optical extinction coefficient, 1/m");
        app.add_option("--water", water, "optical water type")
            ->check(CLI::IsMember({"pure_sea", "clear_ocean", "coastal", "harbor"}));
        app.add_option("--turns-tx", turns_tx, "MI transmit coil turns");
        app.add_option("--turns-rx", turns_rx, "MI receive coil turns");
        app.add_option("--radius-tx-m", radius_tx_m, "MI transmit coil radius, m");
        app.add_option("--radius-rx-m", radius_rx_m, "MI receive coil radius, m");
        app.add_option("--gain-db", gain_db, "MI calibration gain, dB");
    }

    Technology technology() const { return technology_from_string(tech); }

    LinkParams build() const
    {
        const Technology t = technology();
        auto reject = [&](const auto& opt, const char* flag) {
            if (opt) flag_error(std::string(flag) + " does not apply to --tech " + tech);
        };
        switch (t) {
        case Technology::Acoustic: {
            for (const auto* o : {&power_mw, &beta_deg, &aperture_m2, &divergence_half_deg, &extinction, &turns_tx,
                                  &turns_rx, &radius_tx_m, &radius_rx_m, &gain_db})
                reject(*o, "optical/mi flag");
            reject(water, "--water");
            acoustic::AcousticLinkParams p;
            p.source_level_db = sl_db.value_or(p.source_level_db);
            p.frequency_khz = freq_khz.value_or(p.frequency_khz);
            p.spreading_exponent = spreading.value_or(p.spreading_exponent);
            p.medium.water_density = density.value_or(p.medium.water_density);
            p.medium.sound_speed = sound_speed.value_or(p.medium.sound_speed);
            return p;
        }
        case Technology::Optical: {
            for (const auto* o : {&sl_db, &spreading, &density, &sound_speed, &freq_khz, &turns_tx, &turns_rx,
                                  &radius_tx_m, &radius_rx_m, &gain_db})
                reject(*o, "acoustic/mi flag");
            if (water && extinction) flag_error("--water and --extinction are mutually exclusive");
            optical::OpticalLinkParams p;
            p.transmit_power_mw = power_mw.value_or(p.transmit_power_mw);
            p.aperture_area_m2 = aperture_m2.value_or(p.aperture_area_m2);
            p.divergence_half_angle_deg = divergence_half_deg.value_or(p.divergence_half_angle_deg);
            p.misalignment_beta_deg = beta_deg.value_or(p.misalignment_beta_deg);
            if (water)
                p.extinction_per_m = optical::extinction_coefficient(*optical::water_type_from_string(*water));
            else
                p.extinction_per_m = extinction.value_or(p.extinction_per_m);
            return p;
        }
        case Technology::Mi: {
            for (const auto* o : {&sl_db, &spreading, &density, &sound_speed, &aperture_m2, &divergence_half_deg,
                                  &extinction})
                reject(*o, "acoustic/optical flag");
            reject(water, "--water");
            mi::MiLinkParams p;
            p.transmit_power_mw = power_mw.value_or(p.transmit_power_mw);
            p.frequency_khz = freq_khz.value_or(p.frequency_khz);
            p.misalignment_beta_deg = beta_deg.value_or(p.misalignment_beta_deg);
            p.turns_tx = turns_tx.value_or(p.turns_tx);
            p.turns_rx = turns_rx.value_or(p.turns_rx);
            p.coil_radius_tx_m = radius_tx_m.value_or(p.coil_radius_tx_m);
            p.coil_radius_rx_m = radius_rx_m.value_or(p.coil_radius_rx_m);
            p.calibration_gain_db = gain_db.value_or(p.calibration_gain_db);
            return p;
        }
        }
        flag_error("unknown technology");
    }
};

struct SweepRangeFlags {
    LinkFlags link;
    std::optional<double> sensitivity_dbm, dmin, dmax;
    double step = 1.0;
    std::optional<std::string> out;
};

struct LifetimeFlags {
    std::string tech = "acoustic";
    std::vector<std::string> policies;
    double rate = 1.0;
    std::optional<double> rate_max;
    double rate_step = 1.0;
    std::optional<double> capacity_mah, active_ma, sleep_ma, active_s;
    std::optional<std::string> out;
};

struct SimulateFlags {
    std::string scenario;
    std::optional<std::string> out;
};

// Writes through `write` either to the file at `path` or to `out`.
template <class Write>
void emit(const std::optional<std::string>& path, std::ostream& out, Write write)
{
    if (!path) {
        write(out);
        return;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) flag_error("cannot open output file " + *path);
    write(file);
    if (!file) flag_error("failed writing output file " + *path);
}

void default_sweep_bounds(Technology t, double& dmin, double& dmax)
{
    switch (t) {
    case Technology::Acoustic: dmin = 1.0; dmax = 500.0; break;
    case Technology::Optical: dmin = 1.0; dmax = 150.0; break;
    case Technology::Mi: dmin = 1.0; dmax = 100.0; break;
    }
}

int sweep_range(const SweepRangeFlags& f, std::ostream& out)
{
    const LinkParams link = f.link.build();
    validate(link);
    const Technology tech = technology_of(link);
    double dmin = 0.0;
    double dmax = 0.0;
    default_sweep_bounds(tech, dmin, dmax);
    dmin = f.dmin.value_or(dmin);
    dmax = f.dmax.value_or(dmax);
    if (!(dmin < dmax)) flag_error("--dmin must be below --dmax");
    if (!(f.step > 0.0)) flag_error("--step must be positive");

    std::vector<double> distances;
    for (std::size_t i = 0;; ++i) {
        const double d = dmin + static_cast<double>(i) * f.step;
        if (d > dmax * (1.0 + 1e-12)) break;
        distances.push_back(d);
    }
    std::vector<double> rx(distances.size());
    std::visit([&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, acoustic::AcousticLinkParams>)
            acoustic::received_power_density_dbm(p, distances, rx);
        else
            received_power_dbm(p, distances, rx);
    }, link);
    emit(f.out, out, [&](std::ostream& o) { csv::write_range_sweep(o, distances, rx); });

    const PowerDbm sensitivity{f.sensitivity_dbm.value_or(technology_profile(tech).default_sensitivity.value)};
    const double range = max_range(link, sensitivity);
    out << "max_range_m=" << csv::format_sig6(range) << '\n';
    return kOk;
}

WakePolicy::Kind policy_kind(const std::string& s)
{
    if (s == "nowu") return WakePolicy::Kind::NoWakeup;
    if (s == "dc") return WakePolicy::Kind::DutyCycle;
    return WakePolicy::Kind::OnDemand;
}

int lifetime(const LifetimeFlags& f, std::ostream& out)
{
    const Technology tech = technology_from_string(f.tech);
    EnergyProfile profile = default_energy_profile(tech);
    profile.battery_capacity_mah = f.capacity_mah.value_or(profile.battery_capacity_mah);
    profile.active_current_ma = f.active_ma.value_or(profile.active_current_ma);
    profile.sleep_current_ma = f.sleep_ma.value_or(profile.sleep_current_ma);
    profile.active_duration_s = f.active_s.value_or(profile.active_duration_s);
    validate(profile);

    const double rate_max = f.rate_max.value_or(f.rate);
    if (!(f.rate >= 0.0)) flag_error("--rate-per-hour must be >= 0");
    if (!(rate_max >= f.rate)) flag_error("--rate-max must be >= --rate-per-hour");
    if (!(f.rate_step > 0.0)) flag_error("--rate-step must be positive");

    std::vector<double> rates;
    for (std::size_t i = 0;; ++i) {
        const double r = f.rate + static_cast<double>(i) * f.rate_step;
        if (r > rate_max * (1.0 + 1e-12) + 1e-12) break;
        rates.push_back(r);
    }
    std::vector<std::string> policies = f.policies;
    if (policies.empty()) policies = {"nowu", "dc", "od"};

    std::vector<std::vector<double>> columns;
    for (const auto& p : policies) {
        std::vector<double> hours(rates.size());
        lifetime_hours(profile, policy_kind(p), rates, hours);
        columns.push_back(std::move(hours));
    }
    emit(f.out, out, [&](std::ostream& o) {
        csv::write_lifetime_header(o);
        for (std::size_t i = 0; i < policies.size(); ++i) csv::write_lifetime_rows(o, rates, columns[i], policies[i]);
    });
    return kOk;
}

int simulate(const SimulateFlags& f, std::ostream& out)
{
    const sim::SimConfig config = parse_scenario(f.scenario);
    const sim::SimReport report = sim::run(config);
    if (f.out) {
        std::error_code ec;
        std::filesystem::create_directories(*f.out, ec);
        if (ec) flag_error("cannot create output directory " + *f.out);
        const std::filesystem::path dir(*f.out);
        emit((dir / "events.csv").string(), out, [&](std::ostream& o) { csv::write_events(o, report); });
        emit((dir / "summary.csv").string(), out, [&](std::ostream& o) { csv::write_summary(o, report); });
    }
    csv::write_summary(out, report);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Underwater wake-up link budgets, lifetimes and protocol simulation", "uwake"};
    app.require_subcommand(1);

    SweepRangeFlags sweep;
    auto* sweep_cmd = app.add_subcommand("sweep-range", "received power vs distance and maximum wake-up range");
    sweep.link.add_to(*sweep_cmd);
    sweep_cmd->add_option("--sensitivity-dbm", sweep.sensitivity_dbm, "receiver sensitivity (default per technology)");
    sweep_cmd->add_option("--dmin", sweep.dmin, "first distance, m");
    sweep_cmd->add_option("--dmax", sweep.dmax, "last distance, m");
    sweep_cmd->add_option("--step", sweep.step, "distance step, m");
    sweep_cmd->add_option("--out", sweep.out, "CSV output path (stdout when omitted)");

    LifetimeFlags life;
    auto* life_cmd = app.add_subcommand("lifetime", "node lifetime vs transmissions per hour");
    life_cmd->add_option("--tech", life.tech, "acoustic | optical | mi")
        ->required()
        ->check(CLI::IsMember({"acoustic", "optical", "mi"}));
    life_cmd->add_option("--policy", life.policies, "nowu | dc | od, repeatable (default all)")
        ->check(CLI::IsMember({"nowu", "dc", "od"}));
    life_cmd->add_option("--rate-per-hour", life.rate, "first (or only) rate");
    life_cmd->add_option("--rate-max", life.rate_max, "last rate of the sweep");
    life_cmd->add_option("--rate-step", life.rate_step, "rate increment");
    life_cmd->add_option("--capacity-mah", life.capacity_mah);
    life_cmd->add_option("--active-ma", life.active_ma);
    life_cmd->add_option("--sleep-ma", life.sleep_ma);
    life_cmd->add_option("--active-s", life.active_s);
    life_cmd->add_option("--out", life.out, "CSV output path (stdout when omitted)");

    SimulateFlags simf;
    auto* sim_cmd = app.add_subcommand("simulate", "run a wake-up scenario");
    sim_cmd->add_option("--scenario", simf.scenario, "scenario JSON")->required();
    sim_cmd->add_option("--out", simf.out, "directory for events.csv and summary.csv");

    auto fail = [&err](int code, std::string_view token, std::string_view detail) {
        std::string line(detail);
        std::replace(line.begin(), line.end(), '\n', ' ');
        err << "error: " << token << ": " << line << '\n';
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(kFlagError, "flag", e.what());
    }

    try {
        if (sweep_cmd->parsed()) return sweep_range(sweep, out);
        if (life_cmd->parsed()) return lifetime(life, out);
        return simulate(simf, out);
    } catch (const CliFailure& f) {
        return fail(f.exit_code, f.code, f.detail);
    } catch (const NoSolution& e) {
        return fail(kNoSolution, "no_solution", e.what());
    } catch (const ParseError& e) {
        return fail(kFlagError, "parse", e.what());
    } catch (const ValidationError& e) {
        return fail(kValidationError, "validation", e.what());
    } catch (const PolicyError& e) {
        return fail(kFlagError, "policy", e.what());
    } catch (const DomainError& e) {
        return fail(kFlagError, "domain", e.what());
    } catch (const Error& e) {
        return fail(kFlagError, "error", e.what());
    }
}

}  // namespace uwake::cli

// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#include "uwake/link.hpp"

#include <algorithm>

namespace uwake {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Technology technology_of(const LinkParams& link) noexcept
{
    return static_cast<Technology>(link.index());
}

LinkParams default_link(Technology t)
{
    switch (t) {
    case Technology::Acoustic: return acoustic::AcousticLinkParams{};
    case Technology::Optical: return optical::OpticalLinkParams{};
    case Technology::Mi: return mi::MiLinkParams{};
    }
    return acoustic::AcousticLinkParams{};
}

void validate(const LinkParams& link)
{
    std::visit([](const auto& p) { validate(p); }, link);
}

PowerDbm received_power_clamped(const LinkParams& link, double distance_m)
{
    return std::visit(
        Overloaded{
            [&](const acoustic::AcousticLinkParams& p) {
                return acoustic::received_power_density_dbm(
                    p, std::max(distance_m, acoustic::kReferenceDistance));
            },
            [&](const optical::OpticalLinkParams& p) {
                return optical::received_power_dbm(p, distance_m);
            },
            [&](const mi::MiLinkParams& p) {
                return mi::received_power_dbm(p, std::max(distance_m, mi::reference_distance(p)));
            },
        },
        link);
}

double max_range(const LinkParams& link, PowerDbm sensitivity, double tol)
{
    return std::visit(
        Overloaded{
            [&](const acoustic::AcousticLinkParams& p) {
                return acoustic::acoustic_max_range(p, sensitivity, tol);
            },
            [&](const optical::OpticalLinkParams& p) {
                return optical::optical_max_range(p, sensitivity, tol);
            },
            [&](const mi::MiLinkParams& p) { return mi::mi_max_range(p, sensitivity, tol); },
        },
        link);
}

}  // namespace uwake

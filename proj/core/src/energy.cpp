#include "rescell/energy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "rescell/cell_state.hpp"
#include "rescell/errors.hpp"
#include "rescell/traffic.hpp"

namespace rescell {

namespace {

double instantaneous_watts(const HarvestProfile& p, double t_s) {
    switch (p.kind) {
        case HarvestKind::Solar: {
            const double hour = std::fmod(p.t0_hour + t_s / 3600.0, 24.0);
            if (hour < p.day_start_h || hour >= p.day_end_h) return 0.0;
            const double span = p.day_end_h - p.day_start_h;
            if (span <= 0.0) return 0.0;
            return p.peak_w * std::sin(M_PI * (hour - p.day_start_h) / span);
        }
        case HarvestKind::Wind:
            return p.peak_w;
        case HarvestKind::Trace: {
            const auto idx = static_cast<std::size_t>(t_s);
            if (idx >= p.samples_w.size()) {
                throw RangeError("harvest trace exhausted at t=" + std::to_string(idx));
            }
            return p.samples_w[idx];
        }
    }
    return 0.0;
}

}  // namespace

double harvested_energy_wh(const HarvestProfile& profile, double t_s, double tick_s,
                           Rng* noise_rng) {
    if (t_s < 0.0) throw RangeError("harvested_energy_wh: negative time");
    double watts = instantaneous_watts(profile, t_s);
    if (profile.kind != HarvestKind::Trace && profile.noise_sigma > 0.0 && noise_rng) {
        watts *= std::max(0.0, 1.0 + profile.noise_sigma * normal(*noise_rng));
    }
    return watts * tick_s / 3600.0;
}

double consumed_energy_wh(const PowerModel& pm, double prb_utilization, double tick_s) {
    assert(prb_utilization >= 0.0 && prb_utilization <= 1.0);
    return (pm.p0_w + pm.delta_w * prb_utilization) * tick_s / 3600.0;
}

SocUpdate update_soc(const Battery& b, double e_g_wh, double e_c_wh) {
    assert(e_g_wh >= 0.0 && e_c_wh >= 0.0);
    SocUpdate out;
    double e = b.e_wh + e_g_wh - e_c_wh;
    if (e > b.capacity_wh) {
        out.spilled_wh = e - b.capacity_wh;
        e = b.capacity_wh;
    }
    if (e <= 0.0) {
        out.deficit_wh = -e;
        e = 0.0;
        out.depleted = true;
    }
    out.battery = Battery{e, b.capacity_wh};
    return out;
}

std::vector<DepletionDirective> handle_depletion(const CellState& cell,
                                                 const std::vector<UESession>& ues,
                                                 const std::vector<CellState>& cells) {
    std::vector<DepletionDirective> directives;
    if (!cell.outage) return directives;

    for (const auto& ue : ues) {
        if (ue.serving != cell.index) continue;
        DepletionDirective d;
        d.ue = ue.id;
        // Best surviving cell by last measured RSRP; Detached if none exists.
        double best = -1e300;
        int best_cell = -1;
        for (const auto& c : cells) {
            if (c.outage || c.index == cell.index) continue;
            if (c.index < static_cast<int>(ue.last_radio.rsrp_dbm.size())) {
                const double r = ue.last_radio.rsrp_dbm[c.index];
                if (std::isfinite(r) && r > best) {
                    best = r;
                    best_cell = c.index;
                }
            }
        }
        if (best_cell >= 0) d.target_cell = best_cell;
        directives.push_back(d);
    }
    return directives;
}

}  // namespace rescell

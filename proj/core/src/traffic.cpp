#include "rescell/traffic.hpp"

#include <algorithm>
#include <cmath>

#include "rescell/errors.hpp"

namespace rescell {

namespace {

// Published 4-bit CQI spectral efficiencies, bits per resource element,
// CQI 1..15.
constexpr double kCqiEfficiency[15] = {
    0.1523, 0.2344, 0.3770, 0.6016, 0.8770, 1.1758, 1.4766, 1.9141,
    2.4063, 2.7305, 3.3223, 3.9023, 4.5234, 5.1152, 5.5547,
};

constexpr double kResourceElementsPerPrbSecond = 12.0 * 14.0 * 2000.0;

}  // namespace

int draw_arrivals(double rate_per_s, double tick_s, Rng& rng) {
    if (rate_per_s < 0.0) throw RangeError("draw_arrivals: negative rate");
    return poisson(rng, rate_per_s * tick_s);
}

double assign_demand(Rng& rng, std::span<const std::pair<double, double>> profile) {
    double total = 0.0;
    for (const auto& [mbps, p] : profile) {
        if (p < 0.0) throw RangeError("assign_demand: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw RangeError("assign_demand: probabilities sum to " + std::to_string(total));
    }
    double u = uniform01(rng);
    double acc = 0.0;
    for (const auto& [mbps, p] : profile) {
        acc += p;
        if (u < acc) return mbps;
    }
    return profile.back().first;
}

double per_prb_capacity_bps(int cqi) {
    if (cqi <= 0) return 0.0;
    if (cqi > 15) cqi = 15;
    return kCqiEfficiency[cqi - 1] * kResourceElementsPerPrbSecond;
}

int prb_need(double demand_mbps, int cqi) {
    const double cap = per_prb_capacity_bps(cqi);
    if (cap <= 0.0) return 0;
    return static_cast<int>(std::ceil(demand_mbps * 1e6 / cap));
}

ScheduleResult schedule_prbs(int total_prbs, std::span<const SchedulingDemand> demands) {
    ScheduleResult result;
    if (total_prbs <= 0) return result;

    struct Entry {
        UeId ue;
        int need;
        int got = 0;
    };
    std::vector<Entry> entries;
    entries.reserve(demands.size());
    for (const auto& d : demands) {
        entries.push_back({d.ue, prb_need(d.demand_mbps, d.cqi)});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.ue < b.ue; });

    int remaining = total_prbs;
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (auto& e : entries) {
            if (remaining == 0) break;
            if (e.got < e.need) {
                ++e.got;
                --remaining;
                progress = true;
            }
        }
    }

    for (const auto& e : entries) {
        if (e.got > 0) result.allocation[e.ue] = e.got;
        if (e.need > e.got) result.unmet_prbs[e.ue] = e.need - e.got;
    }
    result.utilization = static_cast<double>(total_prbs - remaining) / total_prbs;
    return result;
}

double update_average_load(PRBGrid& grid, int window_s, double instantaneous) {
    if (window_s < 1) throw RangeError("update_average_load: window below 1 s");
    const auto window = static_cast<std::size_t>(window_s);
    if (grid.window_samples.size() != window) {
        grid.window_samples.assign(window, 0.0);
        grid.window_next = 0;
        grid.window_filled = 0;
    }
    grid.window_samples[grid.window_next] = instantaneous;
    grid.window_next = (grid.window_next + 1) % window;
    grid.window_filled = std::min(grid.window_filled + 1, window);

    double sum = 0.0;
    for (std::size_t i = 0; i < grid.window_filled; ++i) sum += grid.window_samples[i];
    grid.sliding_average_utilization = sum / static_cast<double>(grid.window_filled);
    return grid.sliding_average_utilization;
}

}  // namespace rescell

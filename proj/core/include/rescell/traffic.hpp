#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rescell/mobility.hpp"
#include "rescell/radio.hpp"
#include "rescell/rng.hpp"
#include "rescell/types.hpp"

namespace rescell {

constexpr CellId kDetached = -1;

/// One attached user session. Sessions persist until the run ends; a
/// depletion outage may leave them temporarily detached.
struct UESession {
    UeId id = 0;
    Vec2 position;
    Vec2 waypoint;
    double speed_mps = 0.0;
    double demand_mbps = 0.0;
    CellId serving = kDetached;
    CellId previous_serving = kDetached;
    int attach_tick = 0;
    int last_handover_tick = -1000000;
    /// A2/A1 measurement-reporting gate; recorded, no handover effect.
    bool reporting = false;
    TttState a1_ttt;
    TttState a2_ttt;
    /// Per-neighbor A3 time-to-trigger state.
    std::map<CellId, TttState> ttt;
    /// Spatially fixed per-link shadowing, drawn once at session creation.
    std::vector<double> shadowing_db;
    /// Per-link LOS state, decided once at session creation.
    std::vector<bool> link_los;
    RadioSample last_radio;
};

/// Per-cell PRB accounting for the current tick plus the sliding average.
struct PRBGrid {
    int total_prbs = 273;
    std::map<UeId, int> allocated;
    double instantaneous_utilization = 0.0;
    double sliding_average_utilization = 0.0;
    // Ring buffer of the last `window` instantaneous samples.
    std::vector<double> window_samples;
    std::size_t window_next = 0;
    std::size_t window_filled = 0;

    int allocated_total() const {
        int sum = 0;
        for (const auto& [ue, n] : allocated) sum += n;
        return sum;
    }
    int allocated_to(UeId ue) const {
        auto it = allocated.find(ue);
        return it == allocated.end() ? 0 : it->second;
    }
};

/// Result of one scheduling pass over a cell.
struct ScheduleResult {
    std::map<UeId, int> allocation;
    std::map<UeId, int> unmet_prbs;  ///< need minus grant, per UE
    double utilization = 0.0;
};

/// A UE as the scheduler sees it.
struct SchedulingDemand {
    UeId ue = 0;
    double demand_mbps = 0.0;
    int cqi = 0;
};

/// Poisson arrival count for one tick.
int draw_arrivals(double rate_per_s, double tick_s, Rng& rng);

/// Draw a demand from a categorical (mbps, probability) profile.
/// Probabilities must sum to 1 within 1e-9.
double assign_demand(Rng& rng, std::span<const std::pair<double, double>> profile);

/// Downlink capacity of one PRB at a given CQI, in bit/s. CQI 0 carries
/// nothing. Table: published 4-bit CQI efficiencies times 336000 resource
/// elements per PRB-second (12 subcarriers x 14 symbols x 2000 slots/s).
double per_prb_capacity_bps(int cqi);

/// PRBs a UE needs to satisfy its demand at its current CQI; 0 when nothing
/// can be carried (CQI 0).
int prb_need(double demand_mbps, int cqi);

/// Round-robin PRB allocation in UE id order: one PRB per unsatisfied UE per
/// round until demands are met or the grid is exhausted.
ScheduleResult schedule_prbs(int total_prbs, std::span<const SchedulingDemand> demands);

/// Push one instantaneous sample and return the mean over the last
/// `window_s` samples (shorter prefix at run start).
double update_average_load(PRBGrid& grid, int window_s, double instantaneous);

}  // namespace rescell

#pragma once

#include <string>
#include <vector>

#include "rescell/rng.hpp"

namespace rescell {

/// Battery state; state of charge is stored energy normalized by capacity.
struct Battery {
    double e_wh = 0.0;
    double capacity_wh = 0.0;

    double soc() const { return capacity_wh > 0.0 ? e_wh / capacity_wh : 0.0; }
    bool operator==(const Battery&) const = default;
};

/// Result of one battery step. Overflow and shortfall are reported so the
/// per-run energy ledger can be reconciled exactly.
struct SocUpdate {
    Battery battery;
    double spilled_wh = 0.0;   ///< harvest discarded at full capacity
    double deficit_wh = 0.0;   ///< consumption demanded beyond stored energy
    bool depleted = false;     ///< battery clamped at zero
};

enum class HarvestKind { Solar, Wind, Trace };

struct HarvestProfile {
    HarvestKind kind = HarvestKind::Solar;
    double peak_w = 0.0;
    // Solar shape: half-sine between day_start_h and day_end_h (hour of day).
    double day_start_h = 6.0;
    double day_end_h = 18.0;
    /// Hour of day at simulation time zero.
    double t0_hour = 12.0;
    /// Multiplicative noise sigma on Solar/Wind output; 0 disables draws.
    double noise_sigma = 0.0;
    /// Trace mode: one watt sample per second of simulation time.
    std::vector<double> samples_w;
    /// Original trace file path, kept for serialization; empty if inline.
    std::string trace_path;
    bool operator==(const HarvestProfile&) const = default;
};

/// Affine load-dependent consumption: power = p0_w + delta_w * utilization.
struct PowerModel {
    double p0_w = 100.0;
    double delta_w = 200.0;
    bool operator==(const PowerModel&) const = default;
};

/// Energy harvested over one tick, in Wh. Trace mode returns the indexed
/// sample exactly and throws RangeError once the trace is exhausted.
/// `noise_rng` may be null when the profile draws no noise.
double harvested_energy_wh(const HarvestProfile& profile, double t_s, double tick_s,
                           Rng* noise_rng);

/// Energy consumed over one tick at the given PRB utilization, in Wh.
double consumed_energy_wh(const PowerModel& pm, double prb_utilization, double tick_s);

/// Battery step: e' = clamp(e + e_g - e_c, 0, capacity).
SocUpdate update_soc(const Battery& b, double e_g_wh, double e_c_wh);

}  // namespace rescell

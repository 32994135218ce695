#pragma once

#include <span>
#include <vector>

#include "rescell/mobility.hpp"
#include "rescell/types.hpp"

namespace rescell {

/// Proactive-reactive load-balancing thresholds. Two triggers: an
/// instantaneous PRB trigger per tick and a periodic average-load trigger.
struct PrlbParams {
    double proactive_prb_threshold = 0.98;
    double reactive_avg_threshold = 0.65;
    int reactive_period_s = 240;
    double bias_step_db = 2.0;
    double bias_cap_db = 6.0;
    bool operator==(const PrlbParams&) const = default;
};

/// The load figures PRLB is allowed to see. Deliberately contains no energy
/// fields: PRLB outputs are a function of load and topology only.
struct LoadView {
    CellId id = 0;
    double instantaneous = 0.0;
    double average = 0.0;
};

/// One proposed bias value for an ordered (serving, neighbor) pair.
struct CioUpdate {
    CellId serving = 0;
    CellId neighbor = 0;
    double new_bias_db = 0.0;
};

/// Instantaneous trigger. Overloaded cells raise the bias toward each
/// less-loaded neighbor by one step (clamped to bias_cap_db); cells at or
/// below the threshold decay their existing outgoing biases toward 0 by one
/// step instead.
std::vector<CioUpdate> proactive_check(const LoadView& cell,
                                       std::span<const LoadView> neighbors,
                                       const CIOTable& table, const PrlbParams& p);

/// Periodic trigger: at t mod reactive_period == 0 (t > 0), every cell whose
/// sliding average exceeds the threshold applies the proactive bias step
/// against neighbors with lower average load. No-op off-period.
std::vector<CioUpdate> reactive_check(std::span<const LoadView> cells,
                                      const std::vector<std::vector<std::size_t>>& neighbors_of,
                                      int t_s, const CIOTable& table, const PrlbParams& p);

}  // namespace rescell

#pragma once

#include <map>
#include <set>
#include <span>
#include <vector>

#include "rescell/lb_prlb.hpp"
#include "rescell/types.hpp"

namespace rescell {

/// Constants of the energy sustainability index and the power-saving
/// scheduler. The derived midpoint m and width r of the SoC band follow from
/// the critical/sufficient thresholds.
struct EnergyIndexParams {
    double s_l = 0.2;   ///< critical SoC
    double s_h = 0.4;   ///< sufficient SoC
    double k_soc = 6.0; ///< slope of the logistic SoC transition
    double beta = 0.5;
    double lambda = 0.3;
    double mu = 0.35;
    double sigma_g = 0.12;
    double xi_floor = 1e-6;
    int t_interval_s = 60;
    double congestion_prb_threshold = 0.85;
    double congestion_neighbor_fraction = 0.60;
    double cap_reduction_factor = 0.75;
    bool operator==(const EnergyIndexParams&) const = default;

    double m() const { return (s_h + s_l) / 2.0; }
    double r() const { return s_h - s_l; }
};

/// Components of the per-cell energy sustainability index.
struct EnergyIndex {
    double b = 0.0;  ///< logistic SoC bias, in (-1, 1)
    double a = 0.0;  ///< net-power adaptation, in [-beta, beta]
    double z = 0.0;  ///< mid-range attenuation, in [1-lambda, 1]
    double e = 0.0;  ///< composite, clamped to [-1, 1]
};

/// SoC band a cell currently qualifies under for power saving.
enum class SocBand { None, Upper, Lower };

enum class ScheduleTransition {
    None,
    Pending,              ///< qualifying but not yet sustained long enough
    EnteredInterval,
    RetainedInterval,
    EnteredHalfInterval,
    RetainedHalfInterval,
    Removed,
};

/// Dual-phase power-saving schedule. Cells in interval_list are checked
/// every T seconds, cells in half_interval_list every T/2. The lists are
/// disjoint; membership requires the qualifying condition to have been
/// sustained for the band's window.
struct PowerSavingSchedule {
    std::set<CellId> interval_list;
    std::set<CellId> half_interval_list;

    struct Sustain {
        SocBand band = SocBand::None;
        int ticks = 0;  ///< consecutive qualifying evaluations in this band
    };
    std::map<CellId, Sustain> sustain;

    bool in_any(CellId c) const {
        return interval_list.count(c) > 0 || half_interval_list.count(c) > 0;
    }
};

/// Logistic SoC contribution: 2*sigmoid(k_soc*(s - m)/r) - 1.
double soc_bias(double s, const EnergyIndexParams& p);

/// Net-power adaptation: beta * tanh((e_g - e_c)/xi).
double net_power_adaptation(double e_g_wh, double e_c_wh, double xi,
                            const EnergyIndexParams& p);

/// Normalization base: max |net difference| over this tick's RES cells,
/// clipped below at xi_floor. An empty vector yields xi_floor.
double compute_xi(std::span<const double> net_diffs_wh, const EnergyIndexParams& p);

/// Gaussian mid-range attenuation: 1 - lambda * exp(-(s - mu)^2 / (2 sigma^2)).
double midrange_attenuation(double s, const EnergyIndexParams& p);

/// Composite index e = clamp((b + a) * z, -1, 1) with its components.
EnergyIndex energy_index(double s, double e_g_wh, double e_c_wh, double xi,
                         const EnergyIndexParams& p);

/// Scale the bias of every ordered pair whose target cell is RES by that
/// cell's index value. Returns only the pairs whose stored value changes, so
/// identity scaling (e = 1) produces no updates.
std::vector<CioUpdate> scale_cios(const CIOTable& table,
                                  const std::map<CellId, double>& index_by_res_cell);

/// Advance the schedule for one RES cell. The qualifying condition is a net
/// energy deficit (e_c > e_g) inside the SoC band; its sustained duration is
/// tracked per band and resets when the condition or band changes.
ScheduleTransition update_schedule(PowerSavingSchedule& sched, CellId cell, double s,
                                   double e_g_wh, double e_c_wh, double tick_s,
                                   const EnergyIndexParams& p);

/// Power-saving gate: immediately at critical SoC, otherwise on the cell's
/// list period (t mod T or t mod T/2).
bool should_trigger(const PowerSavingSchedule& sched, CellId cell, double s, int t_s,
                    const EnergyIndexParams& p);

/// Energy reduction ratio gamma = min(deficit ratio, SoC cap), with the cap
/// cut by cap_reduction_factor when more than congestion_neighbor_fraction of
/// neighbors are overloaded. Throws DomainError when e_c <= 0.
double estimate_energy_reduction(double s, double e_g_wh, double e_c_wh,
                                 double congested_neighbor_fraction,
                                 const EnergyIndexParams& p);

/// One UE as seen by the load-reduction step.
struct OffloadCandidate {
    UeId ue = 0;
    double distance_m = 1.0;  ///< UE to serving cell, floored at 1 m
    double prb_share = 0.0;   ///< allocated PRBs / total PRBs at the serving cell
    /// Eligible targets (non-depleted, above the attach floor) with their
    /// CIO-biased RSRP.
    std::vector<std::pair<CellId, double>> targets;
};

struct OffloadDirective {
    UeId ue = 0;
    CellId target = 0;
    double released_wh = 0.0;
};

struct PowerSavingPlan {
    std::vector<OffloadDirective> offloads;
    double target_delta_wh = 0.0;
    double released_wh = 0.0;
    bool reached = false;  ///< false means candidates exhausted short of the target
};

/// Load-reduction planning: offload candidates in order of energy
/// contribution over distance until the released load-dependent energy
/// reaches gamma * e_c. Candidates that release nothing are skipped.
PowerSavingPlan plan_power_saving(double gamma, double e_c_wh, double tick_s,
                                  double delta_w, std::span<const OffloadCandidate> candidates);

}  // namespace rescell

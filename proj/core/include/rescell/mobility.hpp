#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rescell/types.hpp"

namespace rescell {

struct UESession;  // defined in traffic.hpp

/// Sparse per-ordered-pair CIO store. Absent pairs read as 0 dB; stored
/// values are clamped to +/- cap_db and exact zeros are pruned.
struct CIOTable {
    std::map<std::pair<CellId, CellId>, double> bias_db;
    double cap_db = 9.0;

    double get(CellId serving, CellId neighbor) const {
        auto it = bias_db.find({serving, neighbor});
        return it == bias_db.end() ? 0.0 : it->second;
    }
    bool operator==(const CIOTable&) const = default;
};

/// Measurement-event configuration (A1/A2 gating, A3 trigger, TTT).
struct EventConfig {
    double a1_threshold_dbm = -100.0;
    double a2_threshold_dbm = -110.0;
    double a3_offset_db = 3.0;
    double hysteresis_db = 1.0;
    double ttt_s = 0.64;
    /// Back-to-back A3 handovers are suppressed for this long per UE;
    /// power-saving and depletion causes are exempt.
    double handover_prohibit_s = 5.0;
    double cio_cap_db = 9.0;
    bool operator==(const EventConfig&) const = default;

    /// TTT in whole ticks, rounded up so sub-tick values still require one
    /// full evaluation.
    int ttt_ticks(double tick_s) const {
        const int t = static_cast<int>(std::ceil(ttt_s / tick_s));
        return t < 1 ? 1 : t;
    }
};

struct HandoverEvent {
    int tick = 0;
    UeId ue = 0;
    CellId source = 0;
    CellId target = 0;
    HandoverCause cause = HandoverCause::A3;
};

/// Per-neighbor time-to-trigger tracker.
struct TttState {
    int elapsed_ticks = 0;
    bool fired = false;  ///< latched until the condition lapses
};

enum class TttPhase { Idle, Running, Fired };

/// A3 entering condition: neighbor + CIO strictly exceeds serving + offset +
/// hysteresis. Equality does not trigger.
bool a3_condition(double serving_rsrp_dbm, double neighbor_rsrp_dbm, double cio_db,
                  const EventConfig& cfg);

/// Advance a TTT tracker by one tick. Returns Fired exactly once per
/// uninterrupted run of true conditions; a false condition resets to Idle.
TttPhase tick_ttt(TttState& state, bool condition_now, int ttt_ticks);

/// Clamp to the table cap, store, and prune exact zeros. Returns the value
/// actually stored.
double apply_cio_update(CIOTable& table, CellId serving, CellId neighbor, double new_cio_db);

/// Move a UE to `target`: updates the serving cell, clears all TTT state and
/// returns the event record. The engine releases the source PRB allocation in
/// the same tick. Throws TargetUnavailableError if the target is in outage.
HandoverEvent execute_handover(UESession& ue, CellId target, bool target_in_outage,
                               HandoverCause cause, int tick);

}  // namespace rescell

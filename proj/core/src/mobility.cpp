#include "rescell/mobility.hpp"

#include <algorithm>
#include <cmath>

#include "rescell/errors.hpp"
#include "rescell/traffic.hpp"

namespace rescell {

bool a3_condition(double serving_rsrp_dbm, double neighbor_rsrp_dbm, double cio_db,
                  const EventConfig& cfg) {
    return neighbor_rsrp_dbm + cio_db >
           serving_rsrp_dbm + cfg.a3_offset_db + cfg.hysteresis_db;
}

TttPhase tick_ttt(TttState& state, bool condition_now, int ttt_ticks) {
    if (!condition_now) {
        state.elapsed_ticks = 0;
        state.fired = false;
        return TttPhase::Idle;
    }
    ++state.elapsed_ticks;
    if (state.elapsed_ticks >= ttt_ticks && !state.fired) {
        state.fired = true;
        return TttPhase::Fired;
    }
    return TttPhase::Running;
}

double apply_cio_update(CIOTable& table, CellId serving, CellId neighbor, double new_cio_db) {
    const double clamped = std::clamp(new_cio_db, -table.cap_db, table.cap_db);
    const auto key = std::make_pair(serving, neighbor);
    if (clamped == 0.0) {
        table.bias_db.erase(key);
    } else {
        table.bias_db[key] = clamped;
    }
    return clamped;
}

HandoverEvent execute_handover(UESession& ue, CellId target, bool target_in_outage,
                               HandoverCause cause, int tick) {
    if (target_in_outage) {
        throw TargetUnavailableError("handover target cell " + std::to_string(target) +
                                     " is in depletion outage");
    }
    HandoverEvent ev;
    ev.tick = tick;
    ev.ue = ue.id;
    ev.source = ue.serving;
    ev.target = target;
    ev.cause = cause;

    ue.previous_serving = ue.serving;
    ue.serving = target;
    ue.last_handover_tick = tick;
    ue.ttt.clear();
    return ev;
}

}  // namespace rescell

#include "rescell/lb_prlb.hpp"

#include <algorithm>
#include <cmath>

namespace rescell {

namespace {

double step_toward(double value, double target, double step) {
    if (value > target) return std::max(target, value - step);
    return std::min(target, value + step);
}

std::vector<CioUpdate> bias_step_toward_lighter(CellId cell, double cell_load,
                                                std::span<const LoadView> neighbors,
                                                bool use_average, const CIOTable& table,
                                                const PrlbParams& p) {
    std::vector<CioUpdate> updates;
    for (const auto& n : neighbors) {
        const double n_load = use_average ? n.average : n.instantaneous;
        if (n_load < cell_load) {
            const double current = table.get(cell, n.id);
            const double target = std::min(current + p.bias_step_db, p.bias_cap_db);
            if (target != current) {
                updates.push_back({cell, n.id, target});
            }
        }
    }
    return updates;
}

}  // namespace

std::vector<CioUpdate> proactive_check(const LoadView& cell,
                                       std::span<const LoadView> neighbors,
                                       const CIOTable& table, const PrlbParams& p) {
    if (cell.instantaneous > p.proactive_prb_threshold) {
        return bias_step_toward_lighter(cell.id, cell.instantaneous, neighbors,
                                        /*use_average=*/false, table, p);
    }
    // Not overloaded: relax this cell's outgoing biases one step toward 0.
    std::vector<CioUpdate> updates;
    for (const auto& [pair, bias] : table.bias_db) {
        if (pair.first != cell.id) continue;
        const double decayed = step_toward(bias, 0.0, p.bias_step_db);
        if (decayed != bias) {
            updates.push_back({pair.first, pair.second, decayed});
        }
    }
    return updates;
}

std::vector<CioUpdate> reactive_check(std::span<const LoadView> cells,
                                      const std::vector<std::vector<std::size_t>>& neighbors_of,
                                      int t_s, const CIOTable& table, const PrlbParams& p) {
    std::vector<CioUpdate> updates;
    if (t_s <= 0 || p.reactive_period_s <= 0 || t_s % p.reactive_period_s != 0) {
        return updates;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& cell = cells[i];
        if (cell.average <= p.reactive_avg_threshold) continue;
        std::vector<LoadView> neighbors;
        neighbors.reserve(neighbors_of[i].size());
        for (std::size_t j : neighbors_of[i]) neighbors.push_back(cells[j]);
        auto part = bias_step_toward_lighter(cell.id, cell.average, neighbors,
                                             /*use_average=*/true, table, p);
        updates.insert(updates.end(), part.begin(), part.end());
    }
    return updates;
}

}  // namespace rescell

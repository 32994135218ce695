#include "rescell/radio.hpp"

#include <algorithm>
#include <cmath>

#include "rescell/errors.hpp"

namespace rescell {

namespace {

constexpr double kSpeedOfLight = 3.0e8;  // propagation constant used by TR 38.901
constexpr double kEffectiveEnvHeight = 1.0;

// CQI 1..15 entry thresholds in dB; below the first entry the report is 0.
constexpr double kCqiThresholdsDb[15] = {
    -6.7, -4.7, -2.3, 0.2, 2.4, 4.3, 5.9, 8.1, 10.3, 11.7, 14.1, 16.3, 18.7, 21.0, 22.7,
};

double breakpoint_distance_m(double carrier_ghz, const PropagationParams& p) {
    const double fc_hz = carrier_ghz * 1e9;
    return 4.0 * (p.h_bs_m - kEffectiveEnvHeight) * (p.h_ut_m - kEffectiveEnvHeight) * fc_hz /
           kSpeedOfLight;
}

double los_loss_db(double d3d, double d2d, double carrier_ghz, const PropagationParams& p) {
    const double dbp = breakpoint_distance_m(carrier_ghz, p);
    if (d2d <= dbp) {
        return 32.4 + 21.0 * std::log10(d3d) + 20.0 * std::log10(carrier_ghz);
    }
    const double dh = p.h_bs_m - p.h_ut_m;
    return 32.4 + 40.0 * std::log10(d3d) + 20.0 * std::log10(carrier_ghz) -
           9.5 * std::log10(dbp * dbp + dh * dh);
}

}  // namespace

double path_loss_db(double distance_3d_m, double carrier_ghz, bool los,
                    const PropagationParams& p) {
    if (distance_3d_m < 1.0) {
        throw RangeError("path_loss_db: distance below 1 m model floor");
    }
    if (carrier_ghz <= 0.5 || carrier_ghz >= 100.0) {
        throw RangeError("path_loss_db: carrier_ghz outside (0.5, 100)");
    }
    // The breakpoint test is defined on the 2D distance; recover it from the
    // 3D link distance and the configured antenna heights.
    const double dh = p.h_bs_m - p.h_ut_m;
    const double d2d_sq = distance_3d_m * distance_3d_m - dh * dh;
    const double d2d = d2d_sq > 0.0 ? std::sqrt(d2d_sq) : 0.0;

    const double pl_los = los_loss_db(distance_3d_m, d2d, carrier_ghz, p);
    if (los) return pl_los;

    const double pl_nlos = 22.4 + 35.3 * std::log10(distance_3d_m) +
                           21.3 * std::log10(carrier_ghz) - 0.3 * (p.h_ut_m - 1.5);
    return std::max(pl_los, pl_nlos);
}

double los_probability(double distance_2d_m) {
    if (distance_2d_m <= 18.0) return 1.0;
    return 18.0 / distance_2d_m +
           std::exp(-distance_2d_m / 36.0) * (1.0 - 18.0 / distance_2d_m);
}

double rsrp_dbm(double tx_power_dbm, double antenna_gain_db, double path_loss_db,
                double shadowing_db) {
    return tx_power_dbm + antenna_gain_db - path_loss_db - shadowing_db;
}

double sinr_db(double serving_rsrp_dbm, std::span<const double> interferer_rsrp_dbm,
               double noise_dbm_in) {
    const double s = dbm_to_mw(serving_rsrp_dbm);
    double denom = dbm_to_mw(noise_dbm_in);
    for (double i : interferer_rsrp_dbm) {
        if (std::isfinite(i)) denom += dbm_to_mw(i);
    }
    return 10.0 * std::log10(s / denom);
}

double noise_dbm(const PropagationParams& p) {
    return -174.0 + 10.0 * std::log10(p.bandwidth_hz) + p.noise_figure_db;
}

int cqi_from_sinr(double sinr_db) {
    int cqi = 0;
    for (int i = 0; i < 15; ++i) {
        if (sinr_db >= kCqiThresholdsDb[i]) cqi = i + 1;
    }
    return cqi;
}

double sector_gain_db(const AntennaPattern& a, double bearing_deg, double azimuth_deg) {
    double off = std::fmod(std::abs(bearing_deg - azimuth_deg), 360.0);
    if (off > 180.0) off = 360.0 - off;
    const double rel = off / a.beamwidth_deg;
    const double attenuation = std::min(12.0 * rel * rel, a.front_to_back_db);
    return a.boresight_gain_db - attenuation;
}

double best_sector_gain_db(const AntennaPattern& a, std::span<const double> sector_azimuths_deg,
                           double bearing_deg) {
    double best = -1e30;
    for (double az : sector_azimuths_deg) {
        best = std::max(best, sector_gain_db(a, bearing_deg, az));
    }
    return best;
}

}  // namespace rescell

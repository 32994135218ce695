#pragma once

#include <span>
#include <vector>

#include "rescell/types.hpp"

namespace rescell {

/// How the LOS state of a link is decided.
enum class LosMode {
    AlwaysLos,             ///< every link is line-of-sight
    DistanceProbability,   ///< Bernoulli draw from the UMi LOS probability curve
};

/// Parabolic sector pattern: boresight gain minus min(12*(theta/bw)^2, fb).
struct AntennaPattern {
    double boresight_gain_db = 8.0;
    double beamwidth_deg = 65.0;
    double front_to_back_db = 30.0;
    bool operator==(const AntennaPattern&) const = default;
};

struct PropagationParams {
    double h_bs_m = 10.0;
    double h_ut_m = 1.5;
    double shadowing_sigma_los_db = 4.0;
    double shadowing_sigma_nlos_db = 7.82;
    double noise_figure_db = 9.0;
    double bandwidth_hz = 98.28e6;  ///< occupied bandwidth of the PRB grid
    LosMode los_mode = LosMode::AlwaysLos;
    /// Optional per-tick zero-mean Gaussian fading term; 0 disables it.
    double fading_sigma_db = 0.0;
    AntennaPattern antenna;
    bool operator==(const PropagationParams&) const = default;
};

/// One tick's worth of measurements for a UE.
struct RadioSample {
    /// RSRP from each cell, indexed by cell position in the scenario list.
    /// -inf marks cells in outage.
    std::vector<double> rsrp_dbm;
    double sinr_db = 0.0;
    int cqi = 0;
};

/// UMi street-canyon path loss (TR 38.901, Table 7.4.1-1) over a 3D link
/// distance. The LOS branch switches from PL1 to PL2 at the breakpoint
/// distance derived from the antenna heights; the NLOS value is the maximum
/// of the LOS loss and the NLOS formula. Throws RangeError below 1 m.
double path_loss_db(double distance_3d_m, double carrier_ghz, bool los,
                    const PropagationParams& p);

/// UMi LOS probability as a function of 2D distance.
double los_probability(double distance_2d_m);

/// Received power: tx + gain - path loss - shadowing, all in dB domain.
double rsrp_dbm(double tx_power_dbm, double antenna_gain_db, double path_loss_db,
                double shadowing_db);

/// Wideband SINR with all terms converted to linear milliwatts.
double sinr_db(double serving_rsrp_dbm, std::span<const double> interferer_rsrp_dbm,
               double noise_dbm);

/// Thermal noise over the configured bandwidth plus the receiver noise figure.
double noise_dbm(const PropagationParams& p);

/// 4-bit CQI from SINR via the published threshold staircase:
/// 0 below -6.7 dB, 15 at or above 22.7 dB.
int cqi_from_sinr(double sinr_db);

/// Gain of one sector toward a bearing (degrees), parabolic pattern.
double sector_gain_db(const AntennaPattern& a, double bearing_deg, double azimuth_deg);

/// Best gain over a site's sectors toward a bearing.
double best_sector_gain_db(const AntennaPattern& a, std::span<const double> sector_azimuths_deg,
                           double bearing_deg);

}  // namespace rescell

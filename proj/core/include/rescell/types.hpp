#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace rescell {

using CellId = int;
using UeId = int;

/// Load-balancing policy arm selected for a run.
enum class Policy { None, Prlb, Eprlb };

std::string to_string(Policy p);

enum class HandoverCause { A3, PowerSaving, Depletion };

std::string to_string(HandoverCause c);

/// Planar position or displacement in meters.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

}  // namespace rescell

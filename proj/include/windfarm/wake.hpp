// Jensen top-hat wake: single-wake deficit, wake sets, root-sum-square
// superposition and effective inflow speed per turbine.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "windfarm/geometry.hpp"
#include "windfarm/layout.hpp"
#include "windfarm/turbine.hpp"

namespace windfarm {

/// Downwind separations at or below this many meters count as side by side.
inline constexpr double kSideBySideTolerance = 1e-9;

/// Wake expansion rate 0.5 / ln(h / z0).
template <typename Scalar>
Scalar decay_factor(Scalar hub_height, Scalar surface_roughness) {
    if (!(surface_roughness > Scalar(0)) || !(hub_height > surface_roughness) ||
        !std::isfinite(hub_height)) {
        throw std::invalid_argument("decay_factor: requires hub_height > surface_roughness > 0");
    }
    return Scalar(0.5) / std::log(hub_height / surface_roughness);
}

/// Linear wake expansion r(d) = R + k d.
template <typename Scalar>
Scalar wake_radius(Scalar rotor_radius, Scalar decay, Scalar downwind_distance) {
    if (!(downwind_distance >= Scalar(0))) {
        throw std::invalid_argument("wake_radius: downwind distance must be >= 0");
    }
    return rotor_radius + decay * downwind_distance;
}

/// Velocity deficit a wake of turbine j imposes on rotor i.
template <typename Scalar>
Scalar pairwise_deficit(Scalar thrust_coefficient, Scalar decay, Scalar rotor_radius,
                        Scalar downwind_distance, Scalar overlap_area,
                        DeficitNumerator numerator = DeficitNumerator::standard) {
    if (!(downwind_distance > Scalar(0))) {
        throw std::invalid_argument("pairwise_deficit: downwind distance must be > 0");
    }
    const Scalar rotor_area = std::numbers::pi_v<Scalar> * rotor_radius * rotor_radius;
    if (!(overlap_area >= Scalar(0)) || overlap_area > rotor_area * (Scalar(1) + Scalar(1e-12))) {
        throw std::invalid_argument("pairwise_deficit: overlap must lie in [0, pi R^2]");
    }
    const Scalar root = std::sqrt(Scalar(1) - thrust_coefficient);
    const Scalar initial =
        numerator == DeficitNumerator::standard ? Scalar(1) - root : Scalar(1) + root;
    const Scalar spread = Scalar(1) + decay * downwind_distance / rotor_radius;
    return initial / (spread * spread) * (overlap_area / rotor_area);
}

double decay_factor(const TurbineSpec& spec);
double wake_radius(const TurbineSpec& spec, double downwind_distance);
double pairwise_deficit(const TurbineSpec& spec, double downwind_distance, double overlap_area);

/// Upstream turbine j shading downstream turbine i for one wind direction.
struct WakeGraphEntry {
    Index downstream;
    Index upstream;
    double downwind_distance;  // m, > 0
    double crosswind_offset;   // m, >= 0
    double overlap_area;       // m^2, in (0, pi R^2]
};

/**
 * All (downstream, upstream) pairs with positive downwind separation and a
 * positive rotor/wake overlap, in the frame rotated by @p theta_degrees.
 * Entries are ordered by downstream index, then upstream index.
 * Throws std::invalid_argument when two positions coincide.
 */
std::vector<WakeGraphEntry> build_wake_sets(const Points& positions, double theta_degrees,
                                            const TurbineSpec& spec);

/// Combined deficit per turbine, sqrt(sum of squared pairwise deficits),
/// clamped to 1.
Eigen::VectorXd velocity_deficits(const Points& positions, double theta_degrees,
                                  const TurbineSpec& spec);

/// u_i = v (1 - D_i) for every turbine.
Eigen::VectorXd effective_speeds(const Points& positions, double theta_degrees,
                                 double free_speed, const TurbineSpec& spec);

}  // namespace windfarm

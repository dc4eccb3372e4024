// Coordinate-frame rotation and circle/circle intersection areas.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace windfarm {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

/// Planar position in meters: x east, y north.
using Point = Point2<double>;

/// Column-wise stack of positions (2 x N).
using Points = Eigen::Matrix2Xd;

template <typename Scalar>
constexpr Scalar degrees_to_radians(Scalar degrees) {
    return degrees * std::numbers::pi_v<Scalar> / Scalar(180);
}

/// [cos t, -sin t; sin t, cos t] for an angle given in degrees.
/// Quarter turns are exact so lattice rows stay exactly crosswind.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> rotation_matrix(Scalar theta_degrees) {
    Scalar reduced = std::fmod(theta_degrees, Scalar(360));
    if (reduced < Scalar(0)) {
        reduced += Scalar(360);
    }
    Scalar c;
    Scalar s;
    if (reduced == Scalar(0)) {
        c = 1, s = 0;
    } else if (reduced == Scalar(90)) {
        c = 0, s = 1;
    } else if (reduced == Scalar(180)) {
        c = -1, s = 0;
    } else if (reduced == Scalar(270)) {
        c = 0, s = -1;
    } else {
        const Scalar t = degrees_to_radians(reduced);
        c = std::cos(t);
        s = std::sin(t);
    }
    Eigen::Matrix<Scalar, 2, 2> m;
    m << c, -s, s, c;
    return m;
}

/**
 * Express positions in the frame aligned with a wind direction that has
 * turned @p theta_degrees clockwise from the reference direction.
 *
 * Accepts a single point or a 2 x N block of points; the result is evaluated
 * so it is safe to keep around.
 */
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, Derived::ColsAtCompileTime>
rotate_frame(const Eigen::MatrixBase<Derived>& points,
             typename Derived::Scalar theta_degrees) {
    static_assert(Derived::RowsAtCompileTime == 2, "points must have two rows");
    return rotation_matrix(theta_degrees) * points;
}

/// Wake disc of radius @c wake_radius and rotor disc of radius
/// @c rotor_radius whose centers sit @c lateral_offset apart.
template <typename Scalar>
struct OverlapInputs {
    Scalar wake_radius;
    Scalar rotor_radius;
    Scalar lateral_offset;
};

/**
 * Exact intersection area of the wake disc and the rotor disc.
 *
 * Disjoint discs give 0, a rotor fully inside the wake gives pi R^2, a wake
 * fully inside the rotor gives pi r^2; everything in between (including the
 * boundary ties) is the lens formed by two circular segments.
 */
template <typename Scalar>
Scalar circle_overlap_area(const OverlapInputs<Scalar>& in) {
    const Scalar a = in.wake_radius;
    const Scalar b = in.rotor_radius;
    const Scalar c = in.lateral_offset;
    if (!std::isfinite(a) || !std::isfinite(b) || a <= Scalar(0) || b <= Scalar(0)) {
        throw std::invalid_argument("circle_overlap_area: radii must be finite and positive");
    }
    if (!std::isfinite(c) || c < Scalar(0)) {
        throw std::invalid_argument("circle_overlap_area: lateral offset must be finite and >= 0");
    }

    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar small = std::min(a, b);
    const Scalar full = pi * small * small;
    if (c > a + b) {
        return Scalar(0);
    }
    if (c < std::abs(a - b)) {
        return full;
    }
    if (c == Scalar(0)) {
        // only reachable with a == b
        return full;
    }

    const auto clamp_unit = [](Scalar v) { return std::clamp(v, Scalar(-1), Scalar(1)); };
    const Scalar alpha = std::acos(clamp_unit((c * c + a * a - b * b) / (Scalar(2) * c * a)));
    const Scalar beta = std::acos(clamp_unit((c * c + b * b - a * a) / (Scalar(2) * c * b)));
    const Scalar kite = std::max(Scalar(0), (-c + a + b) * (c + a - b) * (c - a + b) * (c + a + b));
    const Scalar lens = a * a * alpha + b * b * beta - Scalar(0.5) * std::sqrt(kite);
    return std::clamp(lens, Scalar(0), full);
}

template <typename Scalar>
Scalar circle_overlap_area(Scalar wake_radius, Scalar rotor_radius, Scalar lateral_offset) {
    return circle_overlap_area(OverlapInputs<Scalar>{wake_radius, rotor_radius, lateral_offset});
}

}  // namespace windfarm

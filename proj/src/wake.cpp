#include "windfarm/wake.hpp"

#include <string>

namespace windfarm {

void validate(const PowerCurve& curve) {
    const auto fail = [](const std::string& what) {
        throw std::invalid_argument("power curve: " + what);
    };
    if (!(curve.cut_in >= 0.0)) fail("cut_in must be >= 0");
    if (!(curve.cut_in < curve.rated_speed)) fail("cut_in must be < rated_speed");
    if (!(curve.rated_speed < curve.cut_out)) fail("rated_speed must be < cut_out");
    if (!(curve.rated_power > 0.0)) fail("rated_power must be > 0");
    for (double c : curve.poly) {
        if (!std::isfinite(c)) fail("polynomial coefficients must be finite");
    }
}

void validate(const TurbineSpec& spec) {
    const auto fail = [](const std::string& what) {
        throw std::invalid_argument("turbine: " + what);
    };
    if (!(spec.rotor_radius > 0.0)) fail("rotor_radius must be > 0");
    if (!(spec.hub_height > spec.rotor_radius)) fail("hub_height must be > rotor_radius");
    if (!(spec.thrust_coefficient > 0.0 && spec.thrust_coefficient < 1.0)) {
        fail("thrust_coefficient must lie in (0, 1)");
    }
    if (!(spec.surface_roughness > 0.0 && spec.surface_roughness < spec.hub_height)) {
        fail("surface_roughness must lie in (0, hub_height)");
    }
    validate(spec.power);
}

double decay_factor(const TurbineSpec& spec) {
    return decay_factor(spec.hub_height, spec.surface_roughness);
}

double wake_radius(const TurbineSpec& spec, double downwind_distance) {
    return wake_radius(spec.rotor_radius, decay_factor(spec), downwind_distance);
}

double pairwise_deficit(const TurbineSpec& spec, double downwind_distance, double overlap_area) {
    return pairwise_deficit(spec.thrust_coefficient, decay_factor(spec), spec.rotor_radius,
                            downwind_distance, overlap_area, spec.deficit_numerator);
}

namespace {

void require_distinct(const Points& positions) {
    for (Index i = 0; i < positions.cols(); ++i) {
        for (Index j = i + 1; j < positions.cols(); ++j) {
            if (positions.col(i) == positions.col(j)) {
                throw std::invalid_argument("build_wake_sets: positions " + std::to_string(i) +
                                            " and " + std::to_string(j) + " coincide");
            }
        }
    }
}

}  // namespace

std::vector<WakeGraphEntry> build_wake_sets(const Points& positions, double theta_degrees,
                                            const TurbineSpec& spec) {
    require_distinct(positions);
    const double k = decay_factor(spec);
    const double rotor = spec.rotor_radius;
    const Points frame = rotate_frame(positions, theta_degrees);

    std::vector<WakeGraphEntry> entries;
    for (Index i = 0; i < frame.cols(); ++i) {
        for (Index j = 0; j < frame.cols(); ++j) {
            const double d = frame(1, j) - frame(1, i);
            if (i == j || d <= kSideBySideTolerance) {
                continue;
            }
            const double x = std::abs(frame(0, j) - frame(0, i));
            const double area = circle_overlap_area(wake_radius(rotor, k, d), rotor, x);
            if (area > 0.0) {
                entries.push_back({i, j, d, x, area});
            }
        }
    }
    return entries;
}

Eigen::VectorXd velocity_deficits(const Points& positions, double theta_degrees,
                                  const TurbineSpec& spec) {
    const double k = decay_factor(spec);
    Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(positions.cols());
    for (const WakeGraphEntry& e : build_wake_sets(positions, theta_degrees, spec)) {
        const double dv = pairwise_deficit(spec.thrust_coefficient, k, spec.rotor_radius,
                                           e.downwind_distance, e.overlap_area,
                                           spec.deficit_numerator);
        sum_sq[e.downstream] += dv * dv;
    }
    return sum_sq.cwiseSqrt().cwiseMin(1.0);
}

Eigen::VectorXd effective_speeds(const Points& positions, double theta_degrees,
                                 double free_speed, const TurbineSpec& spec) {
    if (!(free_speed >= 0.0)) {
        throw std::invalid_argument("effective_speeds: free speed must be >= 0");
    }
    const Eigen::VectorXd deficits = velocity_deficits(positions, theta_degrees, spec);
    return free_speed * (Eigen::VectorXd::Ones(deficits.size()) - deficits);
}

}  // namespace windfarm

// Power curve, expected farm output over a wind distribution, farm
// efficiency and the classic aggregate cost curve.
#pragma once

#include <stdexcept>

#include "windfarm/scenario.hpp"
#include "windfarm/turbine.hpp"

namespace windfarm {

/// Raised when the wake-free reference power is zero, e.g. when all the
/// probability mass sits below cut-in.
class DegenerateDenominator : public std::domain_error {
public:
    DegenerateDenominator()
        : std::domain_error("efficiency: denominator degenerate (wake-free power is zero)") {}
};

/// Power in kW at inflow speed @p speed; throws std::invalid_argument when
/// the speed is negative or NaN.
double power_at(const PowerCurve& curve, double speed);

/**
 * Power of one turbine with effective speed @p effective_speed while the
 * free stream blows at @p free_speed. A free stream at or above cut-out
 * shuts the whole farm down, so wakes never turn a stopped turbine back on.
 */
double turbine_power(const PowerCurve& curve, double effective_speed, double free_speed);

struct EvaluationResult {
    /// Expected effective inflow speed per turbine, m/s.
    Eigen::VectorXd per_turbine_speed;
    /// Expected power per turbine, kW.
    Eigen::VectorXd per_turbine_power;
    /// Sum over bins of f_w * sum_i p_g(u_i), kW.
    double expected_power = 0.0;
    /// The same sum with every u_i replaced by the free-stream speed, kW.
    double wake_free_power = 0.0;
    double efficiency = 0.0;
};

/// Throws std::invalid_argument for an unnormalised scenario and
/// DegenerateDenominator when the wake-free power is zero.
EvaluationResult expected_farm_power(const Points& positions, const WindScenario& scenario,
                                     const TurbineSpec& spec);
EvaluationResult expected_farm_power(const Layout& layout, const Grid& grid,
                                     const WindScenario& scenario, const TurbineSpec& spec);

/// N * sum_bins f_w * p_g(v), accumulated in the same order as
/// expected_farm_power so a wake-free layout scores exactly 1.
double wake_free_power(Index turbines, const WindScenario& scenario, const PowerCurve& curve);

double efficiency(const EvaluationResult& result, Index turbines, const WindScenario& scenario,
                  const PowerCurve& curve);

/// N (2/3 + 1/3 exp(-0.00174 N^2)).
double cost_curve(Index turbines);

}  // namespace windfarm

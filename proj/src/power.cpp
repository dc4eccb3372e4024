#include "windfarm/power.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "windfarm/wake.hpp"

namespace windfarm {

double power_at(const PowerCurve& curve, double speed) {
    if (!(speed >= 0.0)) {
        throw std::invalid_argument("power_at: speed must be a number >= 0");
    }
    if (speed < curve.cut_in || speed >= curve.cut_out) {
        return 0.0;
    }
    if (speed >= curve.rated_speed) {
        return curve.rated_power;
    }
    double p = 0.0;
    for (double c : curve.poly) {
        p = p * speed + c;
    }
    return std::clamp(p, 0.0, curve.rated_power);
}

double turbine_power(const PowerCurve& curve, double effective_speed, double free_speed) {
    return free_speed >= curve.cut_out ? 0.0 : power_at(curve, effective_speed);
}

double wake_free_power(Index turbines, const WindScenario& scenario, const PowerCurve& curve) {
    double total = 0.0;
    for (const WindBin& bin : scenario.bins) {
        const double p = turbine_power(curve, bin.speed, bin.speed);
        double farm = 0.0;
        for (Index i = 0; i < turbines; ++i) {
            farm += p;
        }
        total += bin.weight * farm;
    }
    return total;
}

double efficiency(const EvaluationResult& result, Index turbines, const WindScenario& scenario,
                  const PowerCurve& curve) {
    if (turbines < 1) {
        throw std::invalid_argument("efficiency: at least one turbine is required");
    }
    const double denominator = wake_free_power(turbines, scenario, curve);
    if (!(denominator > 0.0)) {
        throw DegenerateDenominator();
    }
    return result.expected_power / denominator;
}

EvaluationResult expected_farm_power(const Points& positions, const WindScenario& scenario,
                                     const TurbineSpec& spec) {
    require_normalized(scenario);
    const Index n = positions.cols();

    // Deficits depend on direction only; compute them once per direction.
    std::vector<double> directions;
    std::vector<Eigen::VectorXd> deficits;
    std::vector<std::size_t> slot(scenario.bins.size());
    for (std::size_t b = 0; b < scenario.bins.size(); ++b) {
        const double theta = scenario.bins[b].direction;
        auto it = std::find(directions.begin(), directions.end(), theta);
        if (it == directions.end()) {
            directions.push_back(theta);
            deficits.push_back(velocity_deficits(positions, theta, spec));
            it = std::prev(directions.end());
        }
        slot[b] = static_cast<std::size_t>(it - directions.begin());
    }

    EvaluationResult r;
    r.per_turbine_speed = Eigen::VectorXd::Zero(n);
    r.per_turbine_power = Eigen::VectorXd::Zero(n);
    for (std::size_t b = 0; b < scenario.bins.size(); ++b) {
        const WindBin& bin = scenario.bins[b];
        const Eigen::VectorXd& d = deficits[slot[b]];
        double farm = 0.0;
        for (Index i = 0; i < n; ++i) {
            const double u = bin.speed * (1.0 - d[i]);
            const double p = turbine_power(spec.power, u, bin.speed);
            farm += p;
            r.per_turbine_speed[i] += bin.weight * u;
            r.per_turbine_power[i] += bin.weight * p;
        }
        r.expected_power += bin.weight * farm;
    }
    r.wake_free_power = wake_free_power(n, scenario, spec.power);
    r.efficiency = efficiency(r, n, scenario, spec.power);
    return r;
}

EvaluationResult expected_farm_power(const Layout& layout, const Grid& grid,
                                     const WindScenario& scenario, const TurbineSpec& spec) {
    return expected_farm_power(grid.positions(layout), scenario, spec);
}

double cost_curve(Index turbines) {
    if (turbines < 1) {
        throw std::invalid_argument("cost_curve: N >= 1");
    }
    const double n = static_cast<double>(turbines);
    return n * (2.0 / 3.0 + std::exp(-0.00174 * n * n) / 3.0);
}

}  // namespace windfarm

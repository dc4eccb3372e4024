// Turbine description shared by the wake and power models.
#pragma once

#include <array>

namespace windfarm {

/// Piecewise power curve in kW: zero below cut-in, a quartic fit up to the
/// rated speed (clamped to [0, rated_power]), rated power until cut-out.
struct PowerCurve {
    double cut_in = 3.0;         // m/s
    double rated_speed = 14.0;   // m/s
    double cut_out = 25.0;       // m/s
    double rated_power = 5000.0; // kW
    /// Quartic coefficients, highest power first: a4 v^4 + ... + a0.
    std::array<double, 5> poly{-0.9114, 21.6654, -113.1189, 201.1211, -55.0267};
};

enum class DeficitNumerator {
    standard,      // 1 - sqrt(1 - C_T)
    paper_literal, // 1 + sqrt(1 - C_T)
};

struct TurbineSpec {
    double rotor_radius = 63.0;          // m
    double hub_height = 90.0;            // m
    double thrust_coefficient = 0.88;
    double surface_roughness = 0.0005;   // m
    PowerCurve power;
    DeficitNumerator deficit_numerator = DeficitNumerator::standard;
};

/// Throws std::invalid_argument naming the first violated constraint.
void validate(const PowerCurve& curve);
void validate(const TurbineSpec& spec);

}  // namespace windfarm

#include "windfarm/scenario.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace windfarm {

Points Grid::positions(const Layout& layout) const {
    if (layout.candidate_count() != size()) {
        throw std::invalid_argument("Grid::positions: layout built for " +
                                    std::to_string(layout.candidate_count()) +
                                    " candidates, grid has " + std::to_string(size()));
    }
    Points out(2, layout.size());
    for (Index k = 0; k < layout.size(); ++k) {
        out.col(k) = points.col(layout.occupied()[static_cast<std::size_t>(k)]);
    }
    return out;
}

Grid build_grid(double side_length, int cells_per_side) {
    if (!(side_length > 0.0) || !std::isfinite(side_length)) {
        throw std::invalid_argument("build_grid: side length must be > 0");
    }
    if (cells_per_side < 1) {
        throw std::invalid_argument("build_grid: cells >= 1");
    }
    Grid grid;
    grid.side_length = side_length;
    grid.cells_per_side = cells_per_side;
    const int n = cells_per_side + 1;
    const double edge = grid.edge();
    grid.points.resize(2, Index(n) * n);
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            grid.points.col(grid.index_of(row, col)) << col * edge, row * edge;
        }
    }
    return grid;
}

double log10_solution_space(Index candidates, Index turbines) {
    if (turbines < 0 || turbines > candidates) {
        throw std::invalid_argument("log10_solution_space: need 0 <= turbines <= candidates");
    }
    const auto lf = [](Index n) { return std::lgamma(static_cast<double>(n) + 1.0); };
    return (lf(candidates) - lf(turbines) - lf(candidates - turbines)) / std::log(10.0);
}

double log10_unconstrained_solution_space(Index candidates) {
    return static_cast<double>(candidates) * std::log10(2.0);
}

double WindScenario::total_weight() const {
    return std::accumulate(bins.begin(), bins.end(), 0.0,
                           [](double acc, const WindBin& b) { return acc + b.weight; });
}

void require_normalized(const WindScenario& scenario) {
    if (scenario.bins.empty()) {
        throw std::invalid_argument("wind scenario has no bins");
    }
    for (const WindBin& b : scenario.bins) {
        if (!(b.weight >= 0.0) || !std::isfinite(b.weight)) {
            throw std::invalid_argument("wind scenario weights must be finite and >= 0");
        }
        if (!(b.speed >= 0.0) || !std::isfinite(b.speed) || !std::isfinite(b.direction)) {
            throw std::invalid_argument("wind scenario speeds must be finite and >= 0");
        }
    }
    const double total = scenario.total_weight();
    if (std::abs(total - 1.0) > kWeightTolerance) {
        throw std::invalid_argument("wind scenario weights sum to " + std::to_string(total) +
                                    ", expected 1");
    }
}

WindScenario single_bin(double direction_degrees, double speed) {
    if (!(speed >= 0.0)) {
        throw std::invalid_argument("single_bin: speed must be >= 0");
    }
    return WindScenario{{{direction_degrees, speed, 1.0}}, 1};
}

WindScenario uniform_directions(double speed, int sectors) {
    if (sectors < 1) {
        throw std::invalid_argument("uniform_directions: sectors >= 1");
    }
    if (!(speed >= 0.0)) {
        throw std::invalid_argument("uniform_directions: speed must be >= 0");
    }
    WindScenario s;
    s.sector_count = sectors;
    for (int k = 0; k < sectors; ++k) {
        s.bins.push_back({360.0 * k / sectors, speed, 1.0 / sectors});
    }
    return s;
}

double weibull_cdf(double speed, double shape, double scale) {
    if (speed <= 0.0) {
        return 0.0;
    }
    if (std::isinf(speed)) {
        return 1.0;
    }
    return -std::expm1(-std::pow(speed / scale, shape));
}

WeibullRoseOptions default_weibull_rose() {
    WeibullRoseOptions o;
    for (int v = 0; v <= 30; ++v) {
        o.speed_edges.push_back(v);
    }
    o.direction_weights.assign(12, 1.0 / 12.0);
    return o;
}

namespace {

// E[V | V > lo] = lo + integral of the survival function over [lo, inf) / S(lo).
double conditional_tail_mean(double lo, double shape, double scale) {
    const double survival_lo = 1.0 - weibull_cdf(lo, shape, scale);
    if (survival_lo <= 0.0) {
        return lo;
    }
    const double span = 40.0 * scale;
    const int n = 20000;  // even, Simpson
    const double h = span / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * (1.0 - weibull_cdf(lo + i * h, shape, scale));
    }
    return lo + acc * h / 3.0 / survival_lo;
}

}  // namespace

WindScenario weibull_rose(const WeibullRoseOptions& o) {
    if (!(o.shape > 0.0) || !(o.scale > 0.0)) {
        throw std::invalid_argument("weibull_rose: shape and scale must be > 0");
    }
    if (o.speed_edges.size() < 2) {
        throw std::invalid_argument("weibull_rose: at least one speed bin is required");
    }
    for (std::size_t i = 1; i < o.speed_edges.size(); ++i) {
        if (!(o.speed_edges[i] > o.speed_edges[i - 1]) || o.speed_edges[i - 1] < 0.0 ||
            (std::isinf(o.speed_edges[i]) && i + 1 != o.speed_edges.size())) {
            throw std::invalid_argument(
                "weibull_rose: speed edges must be ascending, >= 0, and only the last may be infinite");
        }
    }
    if (o.direction_weights.empty()) {
        throw std::invalid_argument("weibull_rose: direction weights are required");
    }
    const double dir_total =
        std::accumulate(o.direction_weights.begin(), o.direction_weights.end(), 0.0);
    for (double w : o.direction_weights) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("weibull_rose: direction weights must be >= 0");
        }
    }
    if (std::abs(dir_total - 1.0) > kWeightTolerance) {
        throw std::invalid_argument("weibull_rose: direction weights must sum to 1");
    }

    const double covered = weibull_cdf(o.speed_edges.back(), o.shape, o.scale) -
                           weibull_cdf(o.speed_edges.front(), o.shape, o.scale);
    if (!(covered > 0.0)) {
        throw std::invalid_argument("weibull_rose: speed bins carry zero probability mass");
    }

    const int sectors = static_cast<int>(o.direction_weights.size());
    WindScenario s;
    s.sector_count = sectors;
    for (int k = 0; k < sectors; ++k) {
        const double direction = 360.0 * k / sectors;
        for (std::size_t b = 1; b < o.speed_edges.size(); ++b) {
            const double lo = o.speed_edges[b - 1];
            const double hi = o.speed_edges[b];
            const double mass =
                (weibull_cdf(hi, o.shape, o.scale) - weibull_cdf(lo, o.shape, o.scale)) / covered;
            const double speed =
                std::isinf(hi) ? conditional_tail_mean(lo, o.shape, o.scale) : 0.5 * (lo + hi);
            s.bins.push_back({direction, speed, o.direction_weights[static_cast<std::size_t>(k)] * mass});
        }
    }
    return s;
}

Layout uniform_layout(const Grid& grid, Index turbines, UniformPattern pattern) {
    const int cells = grid.cells_per_side;
    const int per_side = grid.points_per_side();
    if (turbines < 1) {
        throw std::invalid_argument("uniform_layout: at least one turbine is required");
    }
    const int centre = cells / 2;
    if (turbines == 1) {
        return Layout({grid.index_of(centre, centre)}, grid.size());
    }

    // Equally spaced offsets along one lattice axis, centred on the grid.
    const auto spaced = [cells](int count) {
        const int stride = cells / (count - 1);
        const int offset = (cells - stride * (count - 1)) / 2;
        std::vector<int> at;
        for (int k = 0; k < count; ++k) {
            at.push_back(offset + k * stride);
        }
        return at;
    };

    std::vector<Index> occupied;
    if (pattern == UniformPattern::line) {
        if (turbines > per_side) {
            throw std::invalid_argument("uniform_layout: " + std::to_string(turbines) +
                                        " turbines do not fit on a line of " +
                                        std::to_string(per_side) + " points");
        }
        for (int col : spaced(static_cast<int>(turbines))) {
            occupied.push_back(grid.index_of(centre, col));
        }
    } else {
        const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(turbines))));
        if (side > per_side) {
            throw std::invalid_argument("uniform_layout: " + std::to_string(turbines) +
                                        " turbines do not fit on a square lattice of the grid");
        }
        const std::vector<int> at = spaced(side);
        for (int r = 0; r < side && Index(occupied.size()) < turbines; ++r) {
            for (int c = 0; c < side && Index(occupied.size()) < turbines; ++c) {
                occupied.push_back(grid.index_of(at[static_cast<std::size_t>(r)],
                                                 at[static_cast<std::size_t>(c)]));
            }
        }
    }
    return Layout(std::move(occupied), grid.size());
}

}  // namespace windfarm

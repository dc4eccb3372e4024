// Candidate grid, wind distributions and the deterministic uniform layout.
#pragma once

#include <vector>

#include "windfarm/geometry.hpp"
#include "windfarm/layout.hpp"

namespace windfarm {

/**
 * Square farm split into cells_per_side x cells_per_side cells whose corners
 * are the candidate positions. Candidate (row, col) has index
 * row * (cells_per_side + 1) + col and sits at (col * edge, row * edge).
 */
struct Grid {
    double side_length = 0.0;
    int cells_per_side = 0;
    Points points;

    double edge() const { return side_length / cells_per_side; }
    int points_per_side() const { return cells_per_side + 1; }
    Index size() const { return points.cols(); }
    Index index_of(int row, int col) const { return Index(row) * points_per_side() + col; }
    /// Columns of @c points selected by the layout, in layout order.
    Points positions(const Layout& layout) const;
};

Grid build_grid(double side_length, int cells_per_side);

/// log10 of C(candidates, turbines); log10 of 2^candidates when the turbine
/// count is free.
double log10_solution_space(Index candidates, Index turbines);
double log10_unconstrained_solution_space(Index candidates);

/// One cell of the joint distribution f_w(theta, v).
struct WindBin {
    double direction;  // degrees
    double speed;      // m/s
    double weight;     // probability
};

struct WindScenario {
    std::vector<WindBin> bins;
    int sector_count = 1;

    double total_weight() const;
};

inline constexpr double kWeightTolerance = 1e-9;

/// Throws std::invalid_argument unless weights are non-negative, speeds are
/// non-negative and the weights sum to 1 within kWeightTolerance.
void require_normalized(const WindScenario& scenario);

WindScenario single_bin(double direction_degrees, double speed);

/// @p sectors bins centred on 0, 360/sectors, ... each with weight 1/sectors.
WindScenario uniform_directions(double speed, int sectors = 12);

double weibull_cdf(double speed, double shape, double scale);

struct WeibullRoseOptions {
    double shape = 2.1;
    double scale = 10.5;
    /// Ascending bin edges in m/s; the last edge may be +infinity.
    std::vector<double> speed_edges;
    /// One weight per sector; must sum to 1.
    std::vector<double> direction_weights;
};

/// 1 m/s edges on [0, 30] and 12 equal direction weights.
WeibullRoseOptions default_weibull_rose();

/**
 * Joint weights dir_weight(s) * (F(hi) - F(lo)), renormalised over the
 * covered speed range. Bounded bins are represented by their midpoint; an
 * unbounded last bin by its conditional mean speed.
 */
WindScenario weibull_rose(const WeibullRoseOptions& options);

enum class UniformPattern { line, square_lattice };

/**
 * Evenly spaced baseline. `line` fills equally spaced columns of the middle
 * row; `square_lattice` fills a ceil(sqrt(N)) x ceil(sqrt(N)) lattice centred
 * on the grid, row by row.
 */
Layout uniform_layout(const Grid& grid, Index turbines,
                      UniformPattern pattern = UniformPattern::line);

}  // namespace windfarm

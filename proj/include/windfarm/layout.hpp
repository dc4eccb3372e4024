// Fixed-cardinality turbine placement over a set of candidate positions.
#pragma once

#include <vector>

#include <Eigen/Core>

namespace windfarm {

using Index = Eigen::Index;

/**
 * Occupied candidate indices, kept sorted and unique.
 *
 * The bit-string view of the same data has candidate_count() bits with
 * size() of them set; every operator in the optimizer preserves size().
 */
class Layout {
public:
    Layout() = default;
    /// Sorts @p occupied; throws std::invalid_argument on duplicates or
    /// indices outside [0, candidate_count).
    Layout(std::vector<Index> occupied, Index candidate_count);

    const std::vector<Index>& occupied() const { return occupied_; }
    Index candidate_count() const { return candidate_count_; }
    Index size() const { return static_cast<Index>(occupied_.size()); }
    bool contains(Index candidate) const;

    /// Mask of length candidate_count() with the occupied cells set.
    std::vector<bool> mask() const;

    /// Copy with @p removed swapped for @p added.
    Layout with_swap(Index removed, Index added) const;

    friend bool operator==(const Layout&, const Layout&) = default;

private:
    std::vector<Index> occupied_;
    Index candidate_count_ = 0;
};

/// Number of candidate cells whose occupancy differs.
Index hamming_distance(const Layout& a, const Layout& b);

}  // namespace windfarm

#include "windfarm/layout.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace windfarm {

Layout::Layout(std::vector<Index> occupied, Index candidate_count)
    : occupied_(std::move(occupied)), candidate_count_(candidate_count) {
    if (candidate_count_ < 0) {
        throw std::invalid_argument("Layout: candidate count must be >= 0");
    }
    std::sort(occupied_.begin(), occupied_.end());
    if (std::adjacent_find(occupied_.begin(), occupied_.end()) != occupied_.end()) {
        throw std::invalid_argument("Layout: duplicate occupied index");
    }
    if (!occupied_.empty() && (occupied_.front() < 0 || occupied_.back() >= candidate_count_)) {
        throw std::invalid_argument("Layout: occupied index outside [0, " +
                                    std::to_string(candidate_count_) + ")");
    }
}

bool Layout::contains(Index candidate) const {
    return std::binary_search(occupied_.begin(), occupied_.end(), candidate);
}

std::vector<bool> Layout::mask() const {
    std::vector<bool> m(static_cast<std::size_t>(candidate_count_), false);
    for (Index i : occupied_) {
        m[static_cast<std::size_t>(i)] = true;
    }
    return m;
}

Layout Layout::with_swap(Index removed, Index added) const {
    std::vector<Index> next;
    next.reserve(occupied_.size());
    std::copy_if(occupied_.begin(), occupied_.end(), std::back_inserter(next),
                 [removed](Index i) { return i != removed; });
    if (next.size() == occupied_.size()) {
        throw std::invalid_argument("Layout::with_swap: removed index is not occupied");
    }
    next.push_back(added);
    return Layout(std::move(next), candidate_count_);
}

Index hamming_distance(const Layout& a, const Layout& b) {
    std::vector<Index> diff;
    std::set_symmetric_difference(a.occupied().begin(), a.occupied().end(), b.occupied().begin(),
                                  b.occupied().end(), std::back_inserter(diff));
    return static_cast<Index>(diff.size());
}

}  // namespace windfarm

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "spcls/subset.hpp"
#include "spcls/universe.hpp"

namespace spcls {

/// A closure space: a point universe together with an intersection-closed
/// family of closed subsets containing the empty set and the full set (the
/// full set is the empty intersection). The family is kept deduplicated in
/// canonical order (cardinality, then bit pattern), which makes every
/// derived listing deterministic.
class ClosureSpace {
public:
    /// Throws missing_empty, missing_full, or not_intersection_closed
    /// (with a witness pair).
    static ClosureSpace validate(Universe points, std::vector<Subset> family);

    const Universe& points() const { return points_; }
    std::size_t point_count() const { return points_.size(); }

    const std::vector<Subset>& closed_sets() const { return closed_; }
    std::size_t closed_count() const { return closed_.size(); }

    bool is_closed(const Subset& s) const { return member_.count(s) > 0; }
    bool is_clopen(const Subset& s) const { return is_closed(s) && is_closed(s.complement()); }

    /// Position of a closed set in the canonical list; closed_count() if absent.
    std::size_t index_of(const Subset& s) const;

    /// Smallest closed set containing A (the closure operator).
    Subset closure(const Subset& a) const;

    /// The subspace on A: points restricted to A, closed sets {F & A}.
    ClosureSpace induced(const Subset& a) const;

    /// Closed sets as one-word masks. Requires point_count() <= 64.
    std::vector<std::uint64_t> family_masks() const;

    bool operator==(const ClosureSpace& o) const {
        return points_ == o.points_ && closed_ == o.closed_;
    }

private:
    Universe points_;
    std::vector<Subset> closed_;
    std::unordered_set<Subset, SubsetHash> member_;
};

}  // namespace spcls

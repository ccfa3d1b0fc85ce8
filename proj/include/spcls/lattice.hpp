#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spcls/subset.hpp"
#include "spcls/universe.hpp"

namespace spcls {

/// A finite complete lattice: a partial order on a named universe with
/// materialized meet/join tables and distinguished bottom/top elements.
/// Construction accepts any generating relation (Hasse edges or a full
/// order matrix); the reflexive-transitive closure is always computed, so
/// the two inputs are interchangeable. A finite poset with a bottom, a
/// top, and all pairwise meets and joins is complete; arbitrary meets and
/// joins are folds over the tables.
class Lattice {
public:
    /// Build and fully validate. 'leq_pairs' are (lo, hi) index pairs.
    /// Throws: cycle_detected, no_bottom, no_top, no_meet, no_join.
    static Lattice from_order(Universe elements,
                              const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);

    std::size_t size() const { return elements_.size(); }
    const Universe& elements() const { return elements_; }

    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }

    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    /// Meet of an arbitrary subset; the empty meet is the top element.
    std::size_t meet_all(const Subset& s) const;
    /// Join of an arbitrary subset; the empty join is the bottom element.
    std::size_t join_all(const Subset& s) const;

    /// {b | a <= b} and {b | b <= a} as subsets of the universe.
    const Subset& up_set(std::size_t a) const { return up_[a]; }
    const Subset& down_set(std::size_t a) const { return down_[a]; }

    bool is_atom(std::size_t a) const;
    Subset atoms() const;

    /// The segment [lo, hi] = {x | lo <= x <= hi}.
    Subset segment(std::size_t lo, std::size_t hi) const;

    /// Cover (Hasse) edges (a, b) with b covering a, in index order.
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;

    bool same_tables(const Lattice& o) const {
        return up_ == o.up_ && meet_ == o.meet_ && join_ == o.join_;
    }

private:
    Universe elements_;
    std::vector<Subset> up_, down_;
    std::vector<std::uint32_t> meet_, join_;
    std::size_t bottom_ = 0, top_ = 0;
};

}  // namespace spcls

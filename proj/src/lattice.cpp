#include "spcls/lattice.hpp"

#include "spcls/errors.hpp"

namespace spcls {

namespace {

// Greatest element of 'candidates', i.e. the member that is above every
// other member. Returns size when there is none.
std::size_t greatest_of(const Subset& candidates, const std::vector<Subset>& down) {
    for (std::size_t z : candidates.members())
        if (candidates.subset_of(down[z])) return z;
    return candidates.width();
}

std::size_t least_of(const Subset& candidates, const std::vector<Subset>& up) {
    for (std::size_t z : candidates.members())
        if (candidates.subset_of(up[z])) return z;
    return candidates.width();
}

}  // namespace

Lattice Lattice::from_order(Universe elements,
                            const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs) {
    Lattice lat;
    const std::size_t n = elements.size();
    if (n == 0) fail(Fault::no_bottom, "a complete lattice cannot be empty");
    lat.elements_ = std::move(elements);

    lat.up_.assign(n, Subset(n));
    for (std::size_t a = 0; a < n; ++a) lat.up_[a].set(a);
    for (auto [lo, hi] : leq_pairs) {
        if (lo >= n || hi >= n) fail(Fault::parse, "order pair index out of range");
        lat.up_[lo].set(hi);
    }

    // Transitive closure by fixpoint propagation of up-sets.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            Subset next = lat.up_[a];
            for (std::size_t b : lat.up_[a].members()) next |= lat.up_[b];
            if (!(next == lat.up_[a])) {
                lat.up_[a] = std::move(next);
                changed = true;
            }
        }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : lat.up_[a].members())
            if (a != b && lat.up_[b].test(a))
                fail(Fault::cycle_detected,
                     "order is not antisymmetric: " + lat.elements_.name(a) + " < " +
                         lat.elements_.name(b) + " < " + lat.elements_.name(a));

    lat.down_.assign(n, Subset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : lat.up_[a].members()) lat.down_[b].set(a);

    const Subset everything = Subset::full(n);
    lat.bottom_ = least_of(everything, lat.up_);
    if (lat.bottom_ == n) fail(Fault::no_bottom, "order has no minimal element below all others");
    lat.top_ = greatest_of(everything, lat.down_);
    if (lat.top_ == n) fail(Fault::no_top, "order has no maximal element above all others");

    lat.meet_.assign(n * n, 0);
    lat.join_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            std::size_t m = greatest_of(lat.down_[a] & lat.down_[b], lat.down_);
            if (m == n)
                fail(Fault::no_meet, "no greatest lower bound for (" + lat.elements_.name(a) +
                                         ", " + lat.elements_.name(b) + ")");
            std::size_t j = least_of(lat.up_[a] & lat.up_[b], lat.up_);
            if (j == n)
                fail(Fault::no_join, "no least upper bound for (" + lat.elements_.name(a) + ", " +
                                         lat.elements_.name(b) + ")");
            lat.meet_[a * n + b] = lat.meet_[b * n + a] = static_cast<std::uint32_t>(m);
            lat.join_[a * n + b] = lat.join_[b * n + a] = static_cast<std::uint32_t>(j);
        }
    }
    return lat;
}

std::size_t Lattice::meet_all(const Subset& s) const {
    std::size_t acc = top_;
    for (std::size_t a : s.members()) acc = meet(acc, a);
    return acc;
}

std::size_t Lattice::join_all(const Subset& s) const {
    std::size_t acc = bottom_;
    for (std::size_t a : s.members()) acc = join(acc, a);
    return acc;
}

bool Lattice::is_atom(std::size_t a) const {
    if (a == bottom_) return false;
    // a covers bottom: nothing strictly between.
    for (std::size_t c : down_[a].members())
        if (c != a && c != bottom_) return false;
    return true;
}

Subset Lattice::atoms() const {
    Subset s(size());
    for (std::size_t a = 0; a < size(); ++a)
        if (is_atom(a)) s.set(a);
    return s;
}

Subset Lattice::segment(std::size_t lo, std::size_t hi) const {
    return up_[lo] & down_[hi];
}

std::vector<std::pair<std::size_t, std::size_t>> Lattice::cover_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : up_[a].members()) {
            if (a == b) continue;
            bool cover = true;
            for (std::size_t c : up_[a].members()) {
                if (c != a && c != b && up_[c].test(b)) {
                    cover = false;
                    break;
                }
            }
            if (cover) edges.emplace_back(a, b);
        }
    }
    return edges;
}

}  // namespace spcls

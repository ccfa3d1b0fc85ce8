#include "spcls/closure_space.hpp"

#include <algorithm>

#include "spcls/errors.hpp"

namespace spcls {

ClosureSpace ClosureSpace::validate(Universe points, std::vector<Subset> family) {
    ClosureSpace cs;
    const std::size_t n = points.size();
    for (const Subset& s : family)
        if (s.width() != n)
            fail(Fault::universe_mismatch, "closed-set width does not match point universe");
    cs.points_ = std::move(points);

    std::sort(family.begin(), family.end(), Subset::canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    cs.closed_ = std::move(family);
    cs.member_.reserve(cs.closed_.size() * 2);
    for (const Subset& s : cs.closed_) cs.member_.insert(s);

    if (!cs.member_.count(Subset(n)))
        fail(Fault::missing_empty, "the empty set must be a closed set");
    if (!cs.member_.count(Subset::full(n)))
        fail(Fault::missing_full,
             "the full point set must be a closed set (it is the empty intersection)");

    // Pairwise intersection closure suffices for a finite family.
    for (std::size_t i = 0; i < cs.closed_.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.closed_.size(); ++j) {
            Subset inter = cs.closed_[i] & cs.closed_[j];
            if (!cs.member_.count(inter))
                fail(Fault::not_intersection_closed,
                     "family is not intersection-closed: " + cs.points_.set_name(cs.closed_[i]) +
                         " & " + cs.points_.set_name(cs.closed_[j]) + " = " +
                         cs.points_.set_name(inter) + " is missing");
        }
    }
    return cs;
}

std::size_t ClosureSpace::index_of(const Subset& s) const {
    auto it = std::lower_bound(closed_.begin(), closed_.end(), s, Subset::canonical_less);
    if (it != closed_.end() && *it == s) return static_cast<std::size_t>(it - closed_.begin());
    return closed_.size();
}

Subset ClosureSpace::closure(const Subset& a) const {
    Subset acc = Subset::full(points_.size());
    for (const Subset& f : closed_)
        if (a.subset_of(f)) acc &= f;
    return acc;
}

ClosureSpace ClosureSpace::induced(const Subset& a) const {
    // Re-index the points of A densely, preserving names.
    auto members = a.members();
    std::vector<std::string> names;
    names.reserve(members.size());
    for (std::size_t i : members) names.push_back(points_.name(i));

    std::vector<Subset> fam;
    fam.reserve(closed_.size());
    for (const Subset& f : closed_) {
        Subset g(members.size());
        for (std::size_t k = 0; k < members.size(); ++k)
            if (f.test(members[k])) g.set(k);
        fam.push_back(std::move(g));
    }
    return ClosureSpace::validate(Universe(std::move(names)), std::move(fam));
}

std::vector<std::uint64_t> ClosureSpace::family_masks() const {
    std::vector<std::uint64_t> masks;
    masks.reserve(closed_.size());
    for (const Subset& s : closed_) masks.push_back(s.mask());
    return masks;
}

}  // namespace spcls

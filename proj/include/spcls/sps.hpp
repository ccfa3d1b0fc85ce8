#pragma once

#include <vector>

#include "spcls/lattice.hpp"
#include "spcls/subset.hpp"
#include "spcls/universe.hpp"

namespace spcls {

/// A state property system: a state set, a complete property lattice, and
/// the actuality map sending each state to the set of properties actual in
/// it. Validation enforces the three defining axioms:
///   (1) the bottom property is never actual;
///   (2) each actuality set is closed under arbitrary meets (so it always
///       contains the top, the empty meet);
///   (3) a <= b in the lattice iff every state making a actual makes b
///       actual, i.e. iff cartan(a) is contained in cartan(b).
/// Values are immutable after validation; all queries are const.
class StatePropertySystem {
public:
    /// 'actual[p]' is a subset of the property universe for each state p.
    /// Throws axiom1/axiom2/axiom3 with witnesses on violation.
    static StatePropertySystem validate(Universe states, Lattice lattice,
                                        std::vector<Subset> actual);

    const Universe& states() const { return states_; }
    const Lattice& lattice() const { return lattice_; }
    const Universe& properties() const { return lattice_.elements(); }

    std::size_t state_count() const { return states_.size(); }
    std::size_t property_count() const { return lattice_.size(); }

    /// The actuality set of state p (over the property universe).
    const Subset& actual(std::size_t p) const { return actual_[p]; }

    /// Cartan image of property a: the states in which a is actual.
    const Subset& cartan(std::size_t a) const { return cartan_[a]; }
    const std::vector<Subset>& cartan_images() const { return cartan_; }

    bool operator==(const StatePropertySystem& o) const {
        return states_ == o.states_ && lattice_.same_tables(o.lattice_) &&
               lattice_.elements() == o.lattice_.elements() && actual_ == o.actual_;
    }

private:
    Universe states_;
    Lattice lattice_;
    std::vector<Subset> actual_;
    std::vector<Subset> cartan_;
};

}  // namespace spcls

#include "spcls/sps.hpp"

#include "spcls/errors.hpp"

namespace spcls {

StatePropertySystem StatePropertySystem::validate(Universe states, Lattice lattice,
                                                  std::vector<Subset> actual) {
    StatePropertySystem sps;
    const std::size_t m = states.size();
    const std::size_t n = lattice.size();
    if (actual.size() != m)
        fail(Fault::universe_mismatch, "actuality map must be defined on every state");
    for (const Subset& s : actual)
        if (s.width() != n)
            fail(Fault::universe_mismatch, "actuality set width does not match property universe");

    sps.states_ = std::move(states);
    sps.lattice_ = std::move(lattice);
    sps.actual_ = std::move(actual);

    const Lattice& lat = sps.lattice_;
    for (std::size_t p = 0; p < m; ++p) {
        const Subset& xs = sps.actual_[p];
        if (xs.test(lat.bottom()))
            fail(Fault::axiom1, "axiom (1): bottom property '" +
                                    lat.elements().name(lat.bottom()) +
                                    "' is actual in state '" + sps.states_.name(p) + "'");
        // Meet closure, empty meet included: top must be present, and the
        // meet of any two members must be a member (pairwise closure of a
        // finite set is a fixpoint under arbitrary meets).
        if (!xs.test(lat.top()))
            fail(Fault::axiom2, "axiom (2): top property missing from the actuality set of "
                                "state '" + sps.states_.name(p) + "'");
        auto mem = xs.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j)
                if (!xs.test(lat.meet(mem[i], mem[j])))
                    fail(Fault::axiom2,
                         "axiom (2): actuality set of state '" + sps.states_.name(p) +
                             "' is not meet-closed: " + lat.elements().name(mem[i]) + " ^ " +
                             lat.elements().name(mem[j]) + " = " +
                             lat.elements().name(lat.meet(mem[i], mem[j])) + " is missing");
    }

    sps.cartan_.assign(n, Subset(m));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t a : sps.actual_[p].members()) sps.cartan_[a].set(p);

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool ord = lat.leq(a, b);
            bool inc = sps.cartan_[a].subset_of(sps.cartan_[b]);
            if (ord && !inc)
                fail(Fault::axiom3, "axiom (3): " + lat.elements().name(a) + " <= " +
                                        lat.elements().name(b) +
                                        " but some state makes the first actual and not the "
                                        "second (witness '" +
                                        sps.states_.name((sps.cartan_[a] - sps.cartan_[b]).first()) +
                                        "')");
            if (!ord && inc)
                fail(Fault::axiom3,
                     "axiom (3): every state making '" + lat.elements().name(a) +
                         "' actual makes '" + lat.elements().name(b) +
                         "' actual, but the order does not have them comparable");
        }
    }
    return sps;
}

}  // namespace spcls

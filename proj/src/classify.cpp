#include "spcls/classify.hpp"

#include "spcls/errors.hpp"
#include "spcls/functors.hpp"

namespace spcls {

namespace {

// All three routes of the superselection test against a prebuilt image
// space. Any disagreement means a broken theorem, not bad input.
bool ssr_checked(const StatePropertySystem& sps, const ClosureSpace& cs, std::size_t a,
                 std::size_t b) {
    const Lattice& lat = sps.lattice();
    std::size_t j = lat.join(a, b);

    bool by_definition = true;
    for (std::size_t p = 0; p < sps.state_count(); ++p) {
        if (sps.actual(p).test(j) && !sps.actual(p).test(a) && !sps.actual(p).test(b)) {
            by_definition = false;
            break;
        }
    }
    Subset cartan_union = sps.cartan(a) | sps.cartan(b);
    bool by_cartan = sps.cartan(j) == cartan_union;
    bool by_closedness = cs.is_closed(cartan_union);

    if (by_definition != by_cartan || by_cartan != by_closedness)
        fail(Fault::internal_inconsistency,
             "superselection routes disagree for (" + sps.properties().name(a) + ", " +
                 sps.properties().name(b) + "): definition=" + std::to_string(by_definition) +
                 " cartan-union=" + std::to_string(by_cartan) +
                 " closedness=" + std::to_string(by_closedness));
    return by_definition;
}

std::optional<std::size_t> complement_impl(const StatePropertySystem& sps, const ClosureSpace& cs,
                                           std::size_t a) {
    const Lattice& lat = sps.lattice();
    std::optional<std::size_t> found;
    for (std::size_t b = 0; b < lat.size(); ++b) {
        if (lat.join(a, b) != lat.top() || lat.meet(a, b) != lat.bottom()) continue;
        if (!ssr_checked(sps, cs, a, b)) continue;
        if (found && *found != b)
            fail(Fault::multiple_complements,
                 "property '" + sps.properties().name(a) + "' has two complements: '" +
                     sps.properties().name(*found) + "' and '" + sps.properties().name(b) + "'");
        found = b;
    }
    if (found) {
        if (!(sps.cartan(*found) == sps.cartan(a).complement()))
            fail(Fault::internal_inconsistency,
                 "cartan image of the complement of '" + sps.properties().name(a) +
                     "' is not the set complement of its cartan image");
    }
    return found;
}

}  // namespace

std::size_t strongest_property(const StatePropertySystem& sps, std::size_t p) {
    return sps.lattice().meet_all(sps.actual(p));
}

bool is_T1(const ClosureSpace& cs) {
    for (std::size_t x = 0; x < cs.point_count(); ++x)
        if (!cs.is_closed(Subset::singleton(cs.point_count(), x))) return false;
    return true;
}

AtomisticConditions atomistic_conditions(const StatePropertySystem& sps) {
    AtomisticConditions out;
    const std::size_t m = sps.state_count();

    bool injective = true, all_atoms = true;
    for (std::size_t p = 0; p < m && injective; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            if (sps.actual(p) == sps.actual(q)) {
                injective = false;
                break;
            }
    for (std::size_t p = 0; p < m; ++p)
        if (!sps.lattice().is_atom(strongest_property(sps, p))) {
            all_atoms = false;
            break;
        }
    out.injective_with_atoms = injective && all_atoms;

    out.inclusion_forces_equality = true;
    for (std::size_t p = 0; p < m && out.inclusion_forces_equality; ++p)
        for (std::size_t q = 0; q < m; ++q)
            if (p != q && sps.actual(p).subset_of(sps.actual(q))) {
                out.inclusion_forces_equality = false;
                break;
            }

    out.image_t1 = is_T1(to_closure_space(sps));
    return out;
}

bool superselection_rule(const StatePropertySystem& sps, std::size_t a, std::size_t b) {
    return ssr_checked(sps, to_closure_space(sps), a, b);
}

bool is_s_classical(const StatePropertySystem& sps) {
    ClosureSpace cs = to_closure_space(sps);
    for (std::size_t a = 0; a < sps.property_count(); ++a)
        for (std::size_t b = a; b < sps.property_count(); ++b)
            if (!ssr_checked(sps, cs, a, b)) return false;
    return true;
}

bool is_topology(const ClosureSpace& cs) {
    const auto& family = cs.closed_sets();
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!cs.is_closed(family[i] | family[j])) return false;
    return true;
}

std::optional<std::size_t> d_classical_complement(const StatePropertySystem& sps, std::size_t a) {
    ClosureSpace cs = to_closure_space(sps);
    auto found = complement_impl(sps, cs, a);
    if (found) {
        auto back = complement_impl(sps, cs, *found);
        if (!back || *back != a)
            fail(Fault::internal_inconsistency,
                 "complement of '" + sps.properties().name(a) + "' is not idempotent");
    }
    return found;
}

bool is_d_classical(const StatePropertySystem& sps, std::size_t a) {
    ClosureSpace cs = to_closure_space(sps);
    return complement_impl(sps, cs, a).has_value();
}

Subset d_classical_properties(const StatePropertySystem& sps) {
    ClosureSpace cs = to_closure_space(sps);
    Subset out(sps.property_count());
    for (std::size_t a = 0; a < sps.property_count(); ++a) {
        bool classical = complement_impl(sps, cs, a).has_value();
        bool clopen = cs.is_clopen(sps.cartan(a));
        if (classical != clopen)
            fail(Fault::internal_inconsistency,
                 "d-classical/clopen equivalence fails for '" + sps.properties().name(a) + "'");
        if (classical) out.set(a);
    }
    return out;
}

bool is_clopen(const ClosureSpace& cs, const Subset& a) { return cs.is_clopen(a); }

bool is_connected(const ClosureSpace& cs) {
    const Subset full = Subset::full(cs.point_count());
    for (const Subset& f : cs.closed_sets()) {
        if (f.none() || f == full) continue;
        if (cs.is_closed(f.complement())) return false;
    }
    return true;
}

bool is_connected_subset(const ClosureSpace& cs, const Subset& a, std::size_t cap) {
    if (a.count() > cap)
        fail(Fault::cap_exceeded, "induced subspace on " + std::to_string(a.count()) +
                                      " points exceeds the exhaustive cap of " +
                                      std::to_string(cap) + " (raise --cap)");
    return is_connected(cs.induced(a));
}

bool is_weakly_zero_dimensional(const ClosureSpace& cs) {
    std::vector<Subset> clopens;
    for (const Subset& f : cs.closed_sets())
        if (cs.is_clopen(f)) clopens.push_back(f);

    for (const Subset& f : cs.closed_sets()) {
        Subset inter = Subset::full(cs.point_count());
        for (const Subset& c : clopens)
            if (f.subset_of(c)) inter &= c;
        if (!(inter == f)) return false;
    }
    return true;
}

ClassificationReport classify(const StatePropertySystem& sps) {
    ClassificationReport rep;
    ClosureSpace cs = to_closure_space(sps);

    rep.empty_state_set = sps.state_count() == 0;
    rep.t1 = is_T1(cs);
    rep.atomistic = atomistic_conditions(sps);
    if (!rep.atomistic.agree())
        fail(Fault::internal_inconsistency, "the three atomicity conditions disagree");

    rep.topology = is_topology(cs);
    rep.s_classical = is_s_classical(sps);
    if (rep.s_classical != rep.topology)
        fail(Fault::internal_inconsistency,
             "s-classical does not match topologyhood of the image space");

    rep.d_classical = d_classical_properties(sps);
    rep.complement_of.assign(sps.property_count(), std::nullopt);
    for (std::size_t a : rep.d_classical.members())
        rep.complement_of[a] = complement_impl(sps, cs, a);

    // Complementation is antitone on comparable d-classical pairs.
    for (std::size_t a : rep.d_classical.members())
        for (std::size_t b : rep.d_classical.members())
            if (sps.lattice().leq(a, b) &&
                !sps.lattice().leq(*rep.complement_of[b], *rep.complement_of[a]))
                fail(Fault::internal_inconsistency,
                     "complementation is not antitone at (" + sps.properties().name(a) + ", " +
                         sps.properties().name(b) + ")");

    rep.connected = is_connected(cs);
    Subset trivial(sps.property_count());
    trivial.set(sps.lattice().bottom());
    trivial.set(sps.lattice().top());
    rep.pure_nonclassical = rep.d_classical == trivial;
    if (rep.connected != rep.pure_nonclassical)
        fail(Fault::internal_inconsistency,
             "connectedness does not match triviality of the d-classical properties");

    rep.weakly_zero_dimensional = is_weakly_zero_dimensional(cs);
    return rep;
}

}  // namespace spcls

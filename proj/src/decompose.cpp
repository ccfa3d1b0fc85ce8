#include "spcls/decompose.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "spcls/connectivity.hpp"
#include "spcls/errors.hpp"
#include "spcls/functors.hpp"

namespace spcls {

namespace {

Universe sub_universe(const Universe& parent, const Subset& members) {
    std::vector<std::string> names;
    names.reserve(members.count());
    for (std::size_t i : members.members()) names.push_back(parent.name(i));
    return Universe(std::move(names));
}

// Sub-lattice on the given elements with the inherited order. Bound search
// recomputes meets and joins inside the subset, which may differ from the
// parent tables when the subset is not meet- or join-closed.
Lattice restricted_lattice(const Lattice& parent, const std::vector<std::uint32_t>& elems) {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (parent.leq(elems[i], elems[j])) order.emplace_back(i, j);
    Subset member_set(parent.size());
    for (auto e : elems) member_set.set(e);
    return Lattice::from_order(sub_universe(parent.elements(), member_set), order);
}

Subset reindex(const Subset& parent_set, const std::vector<std::uint32_t>& elems) {
    Subset out(elems.size());
    for (std::size_t k = 0; k < elems.size(); ++k)
        if (parent_set.test(elems[k])) out.set(k);
    return out;
}

[[noreturn]] void rethrow_internal(const std::string& context, const Error& e) {
    fail(Fault::internal_inconsistency, context + ": " + e.what());
}

}  // namespace

Subset component_of(const ClosureSpace& cs, std::size_t x, std::size_t cap) {
    auto table = connected_table(cs, cap);
    const std::size_t n = cs.point_count();
    std::uint64_t acc = 0;
    for (std::uint64_t m = 0; m < table.size(); ++m)
        if (table[m] && ((m >> x) & 1)) acc |= m;

    Subset comp = Subset::from_mask(n, acc);
    if (!table[acc])
        fail(Fault::internal_inconsistency,
             "union of connected sets through '" + cs.points().name(x) + "' is not connected");
    if (!cs.is_closed(comp))
        fail(Fault::internal_inconsistency,
             "connection component of '" + cs.points().name(x) + "' is not closed");
    return comp;
}

ComponentPartition components(const ClosureSpace& cs, std::size_t cap) {
    auto table = connected_table(cs, cap);
    const std::size_t n = cs.point_count();

    std::vector<std::uint64_t> comp_of(n, 0);
    for (std::uint64_t m = 0; m < table.size(); ++m) {
        if (!table[m]) continue;
        std::uint64_t rest = m;
        while (rest) {
            unsigned x = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            comp_of[x] |= m;
        }
    }

    ComponentPartition part;
    part.class_of.assign(n, 0);
    std::vector<std::uint64_t> seen;
    for (std::size_t x = 0; x < n; ++x) {
        auto it = std::find(seen.begin(), seen.end(), comp_of[x]);
        if (it == seen.end()) {
            seen.push_back(comp_of[x]);
            part.classes.push_back(Subset::from_mask(n, comp_of[x]));
            it = seen.end() - 1;
        }
        part.class_of[x] = static_cast<std::uint32_t>(it - seen.begin());
    }

    // Keep the canonical order, remapping class_of accordingly.
    std::vector<std::size_t> perm(part.classes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return Subset::canonical_less(part.classes[a], part.classes[b]);
    });
    std::vector<Subset> ordered;
    std::vector<std::uint32_t> new_index(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        ordered.push_back(part.classes[perm[k]]);
        new_index[perm[k]] = static_cast<std::uint32_t>(k);
    }
    part.classes = std::move(ordered);
    for (auto& c : part.class_of) c = new_index[c];

    // Partition, closedness, connectivity, maximality.
    Subset cover(n);
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
        const Subset& cls = part.classes[i];
        if (cls.intersects(cover))
            fail(Fault::internal_inconsistency, "connection components are not disjoint");
        cover |= cls;
        if (!cs.is_closed(cls))
            fail(Fault::internal_inconsistency,
                 "component " + cs.points().set_name(cls) + " is not closed");
        std::uint64_t m = cls.mask();
        if (!table[m])
            fail(Fault::internal_inconsistency,
                 "component " + cs.points().set_name(cls) + " is not connected");
        for (std::size_t y = 0; y < n; ++y)
            if (!cls.test(y) && table[m | (std::uint64_t(1) << y)])
                fail(Fault::internal_inconsistency,
                     "component " + cs.points().set_name(cls) + " is not maximal: '" +
                         cs.points().name(y) + "' extends it");
    }
    if (!cover.all())
        fail(Fault::internal_inconsistency, "connection components do not cover the points");
    return part;
}

Subset quasi_component_of(const ClosureSpace& cs, std::size_t x) {
    Subset inter = Subset::full(cs.point_count());
    for (const Subset& f : cs.closed_sets())
        if (f.test(x) && cs.is_clopen(f)) inter &= f;
    return inter;
}

ApSubsystem ap_subsystem(const StatePropertySystem& sps, std::size_t a) {
    ApSubsystem sub;
    sub.generator = a;

    const Subset state_set = sps.cartan(a);
    const Subset prop_set = sps.lattice().segment(sps.lattice().bottom(), a);
    for (std::size_t p : state_set.members())
        sub.states_in_parent.push_back(static_cast<std::uint32_t>(p));
    for (std::size_t c : prop_set.members())
        sub.props_in_parent.push_back(static_cast<std::uint32_t>(c));

    std::vector<Subset> actual;
    actual.reserve(sub.states_in_parent.size());
    for (auto p : sub.states_in_parent)
        actual.push_back(reindex(sps.actual(p) & prop_set, sub.props_in_parent));

    try {
        sub.system = StatePropertySystem::validate(
            sub_universe(sps.states(), state_set),
            restricted_lattice(sps.lattice(), sub.props_in_parent), std::move(actual));
    } catch (const Error& e) {
        rethrow_internal(
            "subsystem generated by '" + sps.properties().name(a) + "' failed validation", e);
    }

    sub.embedding.state_map = sub.states_in_parent;
    std::unordered_map<std::uint32_t, std::uint32_t> prop_index;
    for (std::size_t k = 0; k < sub.props_in_parent.size(); ++k)
        prop_index[sub.props_in_parent[k]] = static_cast<std::uint32_t>(k);
    sub.embedding.property_map.reserve(sps.property_count());
    for (std::size_t c = 0; c < sps.property_count(); ++c)
        sub.embedding.property_map.push_back(
            prop_index.at(static_cast<std::uint32_t>(sps.lattice().meet(a, c))));

    auto check = is_sp_morphism(sub.system, sps, sub.embedding);
    if (!check.ok)
        fail(Fault::internal_inconsistency,
             "embedding of the subsystem generated by '" + sps.properties().name(a) +
                 "' is not a morphism: " + check.detail);
    return sub;
}

SpMorphism embedding_morphism(const StatePropertySystem& sps, std::size_t a) {
    return ap_subsystem(sps, a).embedding;
}

bool is_pure_nonclassical(const StatePropertySystem& sps) {
    Subset trivial(sps.property_count());
    trivial.set(sps.lattice().bottom());
    trivial.set(sps.lattice().top());
    return d_classical_properties(sps) == trivial;
}

bool is_totally_classical(const StatePropertySystem& sps) {
    for (std::size_t a = 0; a < sps.property_count(); ++a) {
        if (a == sps.lattice().bottom() || sps.lattice().is_atom(a)) continue;
        if (is_pure_nonclassical(ap_subsystem(sps, a).system)) return false;
    }
    return true;
}

DClassicalLattice d_classical_lattice(const StatePropertySystem& sps) {
    const Lattice& lat = sps.lattice();
    Subset members = d_classical_properties(sps);  // contains bottom and top

    // Meet closure; the empty meet (top) is already present.
    for (bool changed = true; changed;) {
        changed = false;
        auto mem = members.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                std::size_t m = lat.meet(mem[i], mem[j]);
                if (!members.test(m)) {
                    members.set(m);
                    changed = true;
                }
            }
    }

    DClassicalLattice out;
    for (std::size_t c : members.members())
        out.props_in_parent.push_back(static_cast<std::uint32_t>(c));
    out.lattice = restricted_lattice(lat, out.props_in_parent);

    for (std::size_t i = 0; i < out.props_in_parent.size(); ++i)
        for (std::size_t j = i; j < out.props_in_parent.size(); ++j) {
            std::size_t inner = out.props_in_parent[out.lattice.join(i, j)];
            std::size_t parent = lat.join(out.props_in_parent[i], out.props_in_parent[j]);
            if (inner != parent)
                out.join_differs.emplace_back(out.props_in_parent[i], out.props_in_parent[j]);
            std::size_t inner_meet = out.props_in_parent[out.lattice.meet(i, j)];
            if (inner_meet != lat.meet(out.props_in_parent[i], out.props_in_parent[j]))
                fail(Fault::internal_inconsistency,
                     "meet closure of the d-classical properties is not meet-compatible");
        }
    return out;
}

StatePropertySystem d_classical_part(const StatePropertySystem& sps) {
    DClassicalLattice dlat = d_classical_lattice(sps);

    Subset members(sps.property_count());
    for (auto c : dlat.props_in_parent) members.set(c);
    std::vector<Subset> actual;
    actual.reserve(sps.state_count());
    for (std::size_t p = 0; p < sps.state_count(); ++p)
        actual.push_back(reindex(sps.actual(p) & members, dlat.props_in_parent));

    StatePropertySystem part;
    try {
        part = StatePropertySystem::validate(sps.states(), std::move(dlat.lattice),
                                             std::move(actual));
    } catch (const Error& e) {
        rethrow_internal("d-classical part failed validation", e);
    }
    if (!is_weakly_zero_dimensional(to_closure_space(part)))
        fail(Fault::internal_inconsistency,
             "the d-classical part's space is not weakly zero-dimensional");
    return part;
}

Decomposition decompose(const StatePropertySystem& sps, std::size_t cap) {
    Decomposition dec;
    ClosureSpace cs = to_closure_space(sps);
    dec.partition = components(cs, cap);

    // Invert cartan on the component classes to find the generating atoms.
    std::unordered_map<Subset, std::uint32_t, SubsetHash> cartan_index;
    for (std::size_t a = 0; a < sps.property_count(); ++a)
        cartan_index.emplace(sps.cartan(a), static_cast<std::uint32_t>(a));
    for (const Subset& cls : dec.partition.classes) {
        auto it = cartan_index.find(cls);
        if (it == cartan_index.end())
            fail(Fault::atom_not_found, "component " + sps.states().set_name(cls) +
                                            " is not the cartan image of any property");
        dec.atoms.push_back(it->second);
    }

    for (auto a : dec.atoms) {
        dec.components.push_back(ap_subsystem(sps, a));
        if (!is_pure_nonclassical(dec.components.back().system))
            fail(Fault::internal_inconsistency,
                 "component subsystem generated by '" + sps.properties().name(a) +
                     "' is not pure nonclassical");
    }

    // The classical lattice: all joins of the generating atoms (the empty
    // join being the bottom), closed under pairwise joins.
    const Lattice& lat = sps.lattice();
    Subset cset(sps.property_count());
    cset.set(lat.bottom());
    for (auto a : dec.atoms) cset.set(a);
    for (bool changed = true; changed;) {
        changed = false;
        auto mem = cset.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                std::size_t v = lat.join(mem[i], mem[j]);
                if (!cset.test(v)) {
                    cset.set(v);
                    changed = true;
                }
            }
    }
    for (std::size_t c : cset.members())
        dec.classical_props_in_parent.push_back(static_cast<std::uint32_t>(c));
    Lattice classical_lattice = restricted_lattice(lat, dec.classical_props_in_parent);
    for (std::size_t i = 0; i < dec.classical_props_in_parent.size(); ++i)
        for (std::size_t j = i; j < dec.classical_props_in_parent.size(); ++j) {
            std::size_t inner =
                dec.classical_props_in_parent[classical_lattice.meet(i, j)];
            std::size_t parent = lat.meet(dec.classical_props_in_parent[i],
                                          dec.classical_props_in_parent[j]);
            if (inner != parent)
                dec.classical_meet_differs.emplace_back(dec.classical_props_in_parent[i],
                                                        dec.classical_props_in_parent[j]);
        }

    // States of the classical part are the classes; actuality of a class is
    // the restricted actuality of any member, which must not depend on the
    // choice of member.
    std::vector<std::string> class_names;
    std::vector<Subset> eta;
    for (const Subset& cls : dec.partition.classes) {
        class_names.push_back(sps.states().set_name(cls));
        auto members = cls.members();
        Subset restricted =
            reindex(sps.actual(members.front()) & cset, dec.classical_props_in_parent);
        for (std::size_t k = 1; k < members.size(); ++k)
            if (!(reindex(sps.actual(members[k]) & cset, dec.classical_props_in_parent) ==
                  restricted))
                fail(Fault::internal_inconsistency,
                     "classical actuality is not constant on component " +
                         sps.states().set_name(cls));
        eta.push_back(std::move(restricted));
    }
    try {
        dec.classical_part = StatePropertySystem::validate(
            Universe(std::move(class_names)), std::move(classical_lattice), std::move(eta));
    } catch (const Error& e) {
        rethrow_internal("classical part failed validation", e);
    }
    for (std::size_t i = 0; i < dec.classical_part.state_count(); ++i)
        for (std::size_t j = i + 1; j < dec.classical_part.state_count(); ++j)
            if (dec.classical_part.actual(i) == dec.classical_part.actual(j))
                fail(Fault::internal_inconsistency,
                     "classical actuality is not injective on the classes");
    if (!atomistic_conditions(dec.classical_part).value())
        fail(Fault::internal_inconsistency, "the classical part is not atomistic");
    if (!is_totally_classical(dec.classical_part))
        fail(Fault::internal_inconsistency, "the classical part is not totally classical");

    dec.d_lattice = d_classical_lattice(sps);
    dec.d_part = d_classical_part(sps);

    for (std::size_t x = 0; x < cs.point_count(); ++x) {
        const Subset& comp = dec.partition.classes[dec.partition.class_of[x]];
        Subset quasi = quasi_component_of(cs, x);
        if (!comp.subset_of(quasi))
            fail(Fault::internal_inconsistency,
                 "component of '" + cs.points().name(x) + "' escapes its quasi-component");
        if (!(comp == quasi)) dec.quasi_strict_points.push_back(static_cast<std::uint32_t>(x));
    }
    return dec;
}

ClassificationReport classify_full(const StatePropertySystem& sps) {
    ClassificationReport rep = classify(sps);
    rep.totally_classical = is_totally_classical(sps);
    rep.d_classical_part_wzd = is_weakly_zero_dimensional(to_closure_space(d_classical_part(sps)));
    return rep;
}

}  // namespace spcls

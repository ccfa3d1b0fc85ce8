#include "spcls/functors.hpp"

#include <algorithm>

#include "spcls/errors.hpp"

namespace spcls {

ClosureSpace to_closure_space(const StatePropertySystem& sps) {
    return ClosureSpace::validate(sps.states(), sps.cartan_images());
}

StatePropertySystem to_property_system(const ClosureSpace& cs) {
    const auto& family = cs.closed_sets();
    const std::size_t n = family.size();

    std::vector<std::string> prop_names;
    prop_names.reserve(n);
    for (const Subset& f : family) prop_names.push_back(cs.points().set_name(f));

    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (family[i].subset_of(family[j])) order.emplace_back(i, j);
    Lattice lat = Lattice::from_order(Universe(std::move(prop_names)), order);

    std::vector<Subset> actual(cs.point_count(), Subset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p : family[i].members()) actual[p].set(i);

    return StatePropertySystem::validate(cs.points(), std::move(lat), std::move(actual));
}

ContinuousMap to_continuous_map(const StatePropertySystem& source,
                                const StatePropertySystem& target, const SpMorphism& mor) {
    auto check = is_sp_morphism(source, target, mor);
    if (!check.ok) fail(Fault::invalid_input, "not a morphism: " + check.detail);
    return ContinuousMap{mor.state_map};
}

SpMorphism to_sp_morphism(const ClosureSpace& source, const ClosureSpace& target,
                          const ContinuousMap& map) {
    auto check = is_continuous(source, target, map);
    if (!check.ok) fail(Fault::invalid_input, "not continuous: " + check.detail);

    SpMorphism mor;
    mor.state_map = map.point_map;
    mor.property_map.reserve(target.closed_count());
    for (const Subset& b : target.closed_sets()) {
        std::size_t idx = source.index_of(preimage(map, source.point_count(), b));
        if (idx == source.closed_count())
            fail(Fault::internal_inconsistency, "preimage of a closed set vanished after the "
                                                "continuity check");
        mor.property_map.push_back(static_cast<std::uint32_t>(idx));
    }
    return mor;
}

RoundTrip check_roundtrip(const ClosureSpace& cs) {
    ClosureSpace back = to_closure_space(to_property_system(cs));
    if (back == cs) return {};
    RoundTrip rt;
    rt.ok = false;
    const auto& a = cs.closed_sets();
    const auto& b = back.closed_sets();
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::string lhs = i < a.size() ? cs.points().set_name(a[i]) : "(none)";
        std::string rhs = i < b.size() ? back.points().set_name(b[i]) : "(none)";
        if (i >= a.size() || i >= b.size() || !(a[i] == b[i])) {
            rt.detail = "closed-set lists differ at position " + std::to_string(i) + ": " + lhs +
                        " vs " + rhs;
            return rt;
        }
    }
    rt.detail = "point universes differ";
    return rt;
}

RoundTrip check_roundtrip(const StatePropertySystem& sps) {
    ClosureSpace cs = to_closure_space(sps);
    StatePropertySystem back = to_property_system(cs);
    RoundTrip rt;

    // cartan must be a bijection L -> image family that reflects order in
    // both directions, and actuality must agree through it.
    const std::size_t n = sps.property_count();
    if (back.property_count() != n) {
        rt.ok = false;
        rt.detail = "cartan is not injective: " + std::to_string(n) + " properties map onto " +
                    std::to_string(back.property_count()) + " closed sets";
        return rt;
    }
    std::vector<std::size_t> to_image(n);
    for (std::size_t a = 0; a < n; ++a) {
        to_image[a] = cs.index_of(sps.cartan(a));
        if (to_image[a] == cs.closed_count()) {
            rt.ok = false;
            rt.detail = "cartan image of '" + sps.properties().name(a) +
                        "' is missing from the image family";
            return rt;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (sps.lattice().leq(a, b) != back.lattice().leq(to_image[a], to_image[b])) {
                rt.ok = false;
                rt.detail = "cartan does not preserve the order at (" +
                            sps.properties().name(a) + ", " + sps.properties().name(b) + ")";
                return rt;
            }
        }
    }
    for (std::size_t p = 0; p < sps.state_count(); ++p) {
        for (std::size_t a = 0; a < n; ++a) {
            if (sps.actual(p).test(a) != back.actual(p).test(to_image[a])) {
                rt.ok = false;
                rt.detail = "actuality disagrees through cartan at state '" +
                            sps.states().name(p) + "', property '" + sps.properties().name(a) +
                            "'";
                return rt;
            }
        }
    }
    return rt;
}

}  // namespace spcls

#include "spcls/morphisms.hpp"

#include "spcls/errors.hpp"

namespace spcls {

MorphismCheck is_sp_morphism(const StatePropertySystem& source, const StatePropertySystem& target,
                             const SpMorphism& mor) {
    if (mor.state_map.size() != source.state_count())
        fail(Fault::universe_mismatch, "state map must be total on the source states");
    if (mor.property_map.size() != target.property_count())
        fail(Fault::universe_mismatch, "property map must be total on the target properties");
    for (auto t : mor.state_map)
        if (t >= target.state_count())
            fail(Fault::universe_mismatch, "state map image out of range");
    for (auto s : mor.property_map)
        if (s >= source.property_count())
            fail(Fault::universe_mismatch, "property map image out of range");

    for (std::size_t a = 0; a < target.property_count(); ++a) {
        for (std::size_t p = 0; p < source.state_count(); ++p) {
            bool lhs = target.actual(mor.state_map[p]).test(a);
            bool rhs = source.actual(p).test(mor.property_map[a]);
            if (lhs != rhs) {
                MorphismCheck res;
                res.ok = false;
                res.witness = {a, p};
                res.detail = "property '" + target.properties().name(a) + "' and state '" +
                             source.states().name(p) + "': actual in the image state is " +
                             (lhs ? "true" : "false") + " but the mapped property is " +
                             (rhs ? "actual" : "not actual");
                return res;
            }
        }
    }
    return {};
}

ContinuityCheck is_continuous(const ClosureSpace& source, const ClosureSpace& target,
                              const ContinuousMap& map) {
    if (map.point_map.size() != source.point_count())
        fail(Fault::universe_mismatch, "point map must be total on the source points");
    for (auto t : map.point_map)
        if (t >= target.point_count())
            fail(Fault::universe_mismatch, "point map image out of range");

    const auto& family = target.closed_sets();
    for (std::size_t i = 0; i < family.size(); ++i) {
        Subset pre = preimage(map, source.point_count(), family[i]);
        if (!source.is_closed(pre)) {
            ContinuityCheck res;
            res.ok = false;
            res.witness = i;
            res.detail = "preimage of " + target.points().set_name(family[i]) + " is " +
                         source.points().set_name(pre) + ", which is not closed";
            return res;
        }
    }
    return {};
}

Subset preimage(const ContinuousMap& map, std::size_t source_width, const Subset& target_set) {
    Subset pre(source_width);
    for (std::size_t p = 0; p < source_width; ++p)
        if (target_set.test(map.point_map[p])) pre.set(p);
    return pre;
}

SpMorphism identity_sp_morphism(const StatePropertySystem& sps) {
    SpMorphism mor;
    mor.state_map.resize(sps.state_count());
    mor.property_map.resize(sps.property_count());
    for (std::size_t p = 0; p < mor.state_map.size(); ++p)
        mor.state_map[p] = static_cast<std::uint32_t>(p);
    for (std::size_t a = 0; a < mor.property_map.size(); ++a)
        mor.property_map[a] = static_cast<std::uint32_t>(a);
    return mor;
}

ContinuousMap identity_continuous_map(const ClosureSpace& cs) {
    ContinuousMap map;
    map.point_map.resize(cs.point_count());
    for (std::size_t p = 0; p < map.point_map.size(); ++p)
        map.point_map[p] = static_cast<std::uint32_t>(p);
    return map;
}

SpMorphism compose(const SpMorphism& g, const SpMorphism& f) {
    SpMorphism out;
    out.state_map.reserve(f.state_map.size());
    for (auto p : f.state_map) {
        if (p >= g.state_map.size()) fail(Fault::universe_mismatch, "state maps do not chain");
        out.state_map.push_back(g.state_map[p]);
    }
    // Property legs run the other way: (g.f)^props = f^props . g^props.
    out.property_map.reserve(g.property_map.size());
    for (auto a : g.property_map) {
        if (a >= f.property_map.size()) fail(Fault::universe_mismatch, "property maps do not chain");
        out.property_map.push_back(f.property_map[a]);
    }
    return out;
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
    ContinuousMap out;
    out.point_map.reserve(f.point_map.size());
    for (auto p : f.point_map) {
        if (p >= g.point_map.size()) fail(Fault::universe_mismatch, "point maps do not chain");
        out.point_map.push_back(g.point_map[p]);
    }
    return out;
}

}  // namespace spcls

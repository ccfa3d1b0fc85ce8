#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spcls/closure_space.hpp"
#include "spcls/sps.hpp"

namespace spcls {

/// A candidate morphism of state property systems, following the
/// contravariant convention: (state_map, property_map): source -> target
/// sends source states to target states and target properties back to
/// source properties. Valid iff for every target property a and source
/// state p: a is actual in state_map(p) iff property_map(a) is actual in p.
struct SpMorphism {
    std::vector<std::uint32_t> state_map;     // source state -> target state
    std::vector<std::uint32_t> property_map;  // target property -> source property

    bool operator==(const SpMorphism&) const = default;
};

/// A candidate continuous map between closure spaces: valid iff the
/// preimage of every closed set of the target is closed in the source.
struct ContinuousMap {
    std::vector<std::uint32_t> point_map;  // source point -> target point

    bool operator==(const ContinuousMap&) const = default;
};

struct MorphismCheck {
    bool ok = true;
    // On failure, the witnessing (target property, source state) pair.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::string detail;
};

struct ContinuityCheck {
    bool ok = true;
    // On failure, the index of the target closed set whose preimage is not closed.
    std::optional<std::size_t> witness;
    std::string detail;
};

/// Check the actuality biconditional over all (property, state) pairs.
/// Throws universe_mismatch when map sizes or ranges do not fit.
MorphismCheck is_sp_morphism(const StatePropertySystem& source, const StatePropertySystem& target,
                             const SpMorphism& mor);

/// Check closedness of all preimages. Throws universe_mismatch as above.
ContinuityCheck is_continuous(const ClosureSpace& source, const ClosureSpace& target,
                              const ContinuousMap& map);

Subset preimage(const ContinuousMap& map, std::size_t source_width, const Subset& target_set);

SpMorphism identity_sp_morphism(const StatePropertySystem& sps);
ContinuousMap identity_continuous_map(const ClosureSpace& cs);

/// Composition g . f (apply f first). Sizes must chain; throws otherwise.
SpMorphism compose(const SpMorphism& g, const SpMorphism& f);
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

}  // namespace spcls

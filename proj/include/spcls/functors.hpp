#pragma once

#include <string>

#include "spcls/closure_space.hpp"
#include "spcls/morphisms.hpp"
#include "spcls/sps.hpp"

namespace spcls {

/// The object part of the functor from systems to spaces: the closure
/// space on the states whose closed sets are the Cartan images of all
/// properties. Always a valid closure space for a valid system.
ClosureSpace to_closure_space(const StatePropertySystem& sps);

/// The object part of the functor from spaces to systems: the system on
/// the points whose property lattice is the closed-set family ordered by
/// inclusion (meet = intersection, join = closure of union) and whose
/// actuality map sends a point to the closed sets containing it.
/// Properties are named by their set contents, e.g. "{p,q}".
StatePropertySystem to_property_system(const ClosureSpace& cs);

/// Morphism part, systems -> spaces: keep the state map, forget the
/// property map. Throws invalid_input when 'mor' is not a valid morphism.
ContinuousMap to_continuous_map(const StatePropertySystem& source,
                                const StatePropertySystem& target, const SpMorphism& mor);

/// Morphism part, spaces -> systems: pair the point map with its closed-set
/// preimage map acting target family -> source family; the resulting
/// property map is indexed against to_property_system of both spaces.
/// Throws invalid_input when 'map' is not continuous.
SpMorphism to_sp_morphism(const ClosureSpace& source, const ClosureSpace& target,
                          const ContinuousMap& map);

struct RoundTrip {
    bool ok = true;
    std::string detail;  // first discrepancy when !ok
};

/// Space -> system -> space must reproduce the space exactly.
RoundTrip check_roundtrip(const ClosureSpace& cs);

/// System -> space -> system must be isomorphic to the input via the pair
/// (identity on states, cartan): cartan is an order isomorphism onto the
/// image lattice and preserves actuality both ways.
RoundTrip check_roundtrip(const StatePropertySystem& sps);

}  // namespace spcls

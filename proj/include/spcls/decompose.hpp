#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spcls/classify.hpp"
#include "spcls/closure_space.hpp"
#include "spcls/morphisms.hpp"
#include "spcls/sps.hpp"

namespace spcls {

inline constexpr std::size_t kDefaultCap = 16;

/// The connection components of a closure space: pairwise disjoint closed
/// connected classes covering the points.
struct ComponentPartition {
    std::vector<Subset> classes;          // canonical order
    std::vector<std::uint32_t> class_of;  // per point
};

/// Union of all connected subsets containing x, by exhaustive subset
/// enumeration over the memoized connectivity table. The result is
/// asserted connected, closed, and maximal.
Subset component_of(const ClosureSpace& cs, std::size_t x, std::size_t cap = kDefaultCap);

ComponentPartition components(const ClosureSpace& cs, std::size_t cap = kDefaultCap);

/// Intersection of all clopen sets containing x. Components are always
/// contained in quasi-components; strictness is recorded, never an error.
Subset quasi_component_of(const ClosureSpace& cs, std::size_t x);

/// The subsystem generated by property a: states cartan(a), the lattice
/// segment [bottom, a], actuality restricted to both, together with the
/// embedding (state inclusion, c -> a meet c) into the parent.
struct ApSubsystem {
    std::size_t generator = 0;  // property index in the parent
    StatePropertySystem system;
    std::vector<std::uint32_t> states_in_parent;  // subsystem state -> parent state
    std::vector<std::uint32_t> props_in_parent;   // subsystem property -> parent property
    SpMorphism embedding;                         // subsystem -> parent
};

ApSubsystem ap_subsystem(const StatePropertySystem& sps, std::size_t a);

/// Just the embedding pair of the ap-subsystem generated by a, validated.
SpMorphism embedding_morphism(const StatePropertySystem& sps, std::size_t a);

/// Only bottom and top are d-classical.
bool is_pure_nonclassical(const StatePropertySystem& sps);

/// Every pure nonclassical segment [bottom, a] is trivial: a is the bottom
/// or an atom.
bool is_totally_classical(const StatePropertySystem& sps);

/// The lattice of all meets of d-classical properties. The join table is
/// materialized from the meet of upper bounds within the sublattice and can
/// differ from the parent join; differing pairs are recorded.
struct DClassicalLattice {
    Lattice lattice;
    std::vector<std::uint32_t> props_in_parent;
    std::vector<std::pair<std::size_t, std::size_t>> join_differs;  // parent indices
};

DClassicalLattice d_classical_lattice(const StatePropertySystem& sps);

/// (states, d-classical lattice, restricted actuality); its image space is
/// asserted weakly zero-dimensional.
StatePropertySystem d_classical_part(const StatePropertySystem& sps);

/// The full decomposition: one pure nonclassical subsystem per connection
/// component, embedded into the parent, plus the totally classical system
/// on the component classes, plus the d-classical part. Every theorem the
/// construction relies on is asserted; violations raise
/// internal_inconsistency.
struct Decomposition {
    ComponentPartition partition;
    std::vector<std::uint32_t> atoms;  // generating property per class
    std::vector<ApSubsystem> components;

    StatePropertySystem classical_part;  // states = classes, lattice = atom joins
    std::vector<std::uint32_t> classical_props_in_parent;
    std::vector<std::pair<std::size_t, std::size_t>> classical_meet_differs;  // parent indices

    DClassicalLattice d_lattice;
    StatePropertySystem d_part;

    std::vector<std::uint32_t> quasi_strict_points;  // component strictly inside quasi-component
};

Decomposition decompose(const StatePropertySystem& sps, std::size_t cap = kDefaultCap);

/// classify() plus the fields that need subsystem construction: total
/// classicality and weak zero-dimensionality of the d-classical part.
ClassificationReport classify_full(const StatePropertySystem& sps);

}  // namespace spcls

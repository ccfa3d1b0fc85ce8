#pragma once

#include <optional>
#include <vector>

#include "spcls/closure_space.hpp"
#include "spcls/sps.hpp"

namespace spcls {

/// The strongest property a state makes actual: the meet of its actuality
/// set. Lies in the set itself by meet closure.
std::size_t strongest_property(const StatePropertySystem& sps, std::size_t p);

/// All singletons closed.
bool is_T1(const ClosureSpace& cs);

/// The three equivalent atomicity conditions, evaluated independently:
/// (1) the actuality map is injective and every strongest property is an
/// atom; (2) actuality-set inclusion forces state equality; (3) the image
/// closure space is T1. A valid system must make them agree.
struct AtomisticConditions {
    bool injective_with_atoms = false;
    bool inclusion_forces_equality = false;
    bool image_t1 = false;

    bool agree() const {
        return injective_with_atoms == inclusion_forces_equality &&
               inclusion_forces_equality == image_t1;
    }
    bool value() const { return injective_with_atoms; }
};
AtomisticConditions atomistic_conditions(const StatePropertySystem& sps);

/// Superselection rule between two properties: their join actual in a state
/// forces one of them actual. Computed from the definition, from the
/// cartan-union identity, and from closedness of the cartan union; the
/// three routes must agree (internal_inconsistency otherwise).
bool superselection_rule(const StatePropertySystem& sps, std::size_t a, std::size_t b);

/// Every property pair separated by a superselection rule.
bool is_s_classical(const StatePropertySystem& sps);

/// The closed family is closed under pairwise union.
bool is_topology(const ClosureSpace& cs);

/// The unique complement of a when a is deterministically classical
/// (join = top, meet = bottom, separated by a superselection rule);
/// nullopt when a has no such complement. Uniqueness, idempotence and the
/// set-complement identity of the cartan images are verified on success.
std::optional<std::size_t> d_classical_complement(const StatePropertySystem& sps, std::size_t a);

bool is_d_classical(const StatePropertySystem& sps, std::size_t a);

/// All d-classical properties as a property subset. Cross-checked against
/// clopenness of the cartan images.
Subset d_classical_properties(const StatePropertySystem& sps);

bool is_clopen(const ClosureSpace& cs, const Subset& a);

/// No clopen set other than the empty and full set. Empty and one-point
/// spaces count as connected.
bool is_connected(const ClosureSpace& cs);

/// Connectivity of the subspace induced on A. 'cap' bounds |A| (the
/// exhaustive-enumeration cap shared with component computation).
bool is_connected_subset(const ClosureSpace& cs, const Subset& a, std::size_t cap);

/// Every closed set is the intersection of the clopen sets containing it
/// (the empty intersection being the full set). This canonical criterion is
/// equivalent to the existence of a clopen base: the family of all clopens
/// is the largest candidate base.
bool is_weakly_zero_dimensional(const ClosureSpace& cs);

struct ClassificationReport {
    bool empty_state_set = false;  // permitted, but flagged
    bool t1 = false;
    AtomisticConditions atomistic;
    bool s_classical = false;
    bool topology = false;
    bool connected = false;
    bool pure_nonclassical = false;
    bool totally_classical = false;
    bool weakly_zero_dimensional = false;           // of the system's own space
    bool d_classical_part_wzd = false;              // of the d-classical part's space
    Subset d_classical;                             // property subset
    std::vector<std::optional<std::size_t>> complement_of;  // per property
};

/// Full classification with every paired predicate cross-checked; throws
/// internal_inconsistency when an equivalence fails to hold.
ClassificationReport classify(const StatePropertySystem& sps);

}  // namespace spcls

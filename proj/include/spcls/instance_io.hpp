#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"
#include "spcls/closure_space.hpp"
#include "spcls/morphisms.hpp"
#include "spcls/sps.hpp"

namespace spcls {

using Json = nlohmann::ordered_json;

/// A parsed instance file: either a state property system
/// ("kind": "sps" with states/properties/order/xi) or a closure space
/// ("kind": "cls" with points/closed). Parsing validates fully, so holding
/// a ParsedInstance means the axioms hold.
struct ParsedInstance {
    std::variant<StatePropertySystem, ClosureSpace> value;

    bool is_sps() const { return std::holds_alternative<StatePropertySystem>(value); }
    const StatePropertySystem& sps() const { return std::get<StatePropertySystem>(value); }
    const ClosureSpace& cls() const { return std::get<ClosureSpace>(value); }
};

ParsedInstance parse_instance(const std::string& text);
ParsedInstance load_instance(const std::filesystem::path& path);

/// Canonical serializations: property order follows the universe, order
/// edges are the cover relation sorted by index, closed sets are in
/// canonical set order. Identical values serialize to identical bytes.
Json to_json(const StatePropertySystem& sps);
Json to_json(const ClosureSpace& cs);
std::string to_text(const Json& j);

/// A morphism file: {"m": {...}, "n": {...}} between systems (m maps
/// source states to target states, n maps target properties to source
/// properties), or {"f": {...}} between spaces.
struct MorphismFile {
    bool is_point_map = false;
    std::map<std::string, std::string> m, n, f;
};
MorphismFile load_morphism_file(const std::filesystem::path& path);

SpMorphism resolve_sp_morphism(const MorphismFile& file, const StatePropertySystem& source,
                               const StatePropertySystem& target);
ContinuousMap resolve_continuous_map(const MorphismFile& file, const ClosureSpace& source,
                                     const ClosureSpace& target);

}  // namespace spcls

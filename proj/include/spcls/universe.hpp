#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spcls/subset.hpp"

namespace spcls {

/// A finite indexed universe of named elements. Indices are dense 0..n-1;
/// names are unique. Used for both state sets and property sets.
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Index lookup that must succeed; throws Fault::parse otherwise.
    std::size_t require(std::string_view name) const;

    /// Render a subset of this universe as "{a,b,c}" in index order.
    std::string set_name(const Subset& s) const;

    /// Render a subset as a comma-separated name list, no braces.
    std::string list_names(const Subset& s) const;

    bool operator==(const Universe& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace spcls

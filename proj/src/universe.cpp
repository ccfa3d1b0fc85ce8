#include "spcls/universe.hpp"

#include "spcls/errors.hpp"

namespace spcls {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) fail(Fault::parse, "empty element name");
        auto [it, inserted] = index_.emplace(names_[i], i);
        (void)it;
        if (!inserted) fail(Fault::parse, "duplicate element name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Universe::require(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) fail(Fault::parse, "unknown element name '" + std::string(name) + "'");
    return *idx;
}

std::string Universe::set_name(const Subset& s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s.members()) {
        if (!first) out += ",";
        out += names_[i];
        first = false;
    }
    out += "}";
    return out;
}

std::string Universe::list_names(const Subset& s) const {
    std::string out;
    bool first = true;
    for (std::size_t i : s.members()) {
        if (!first) out += ", ";
        out += names_[i];
        first = false;
    }
    return out;
}

}  // namespace spcls

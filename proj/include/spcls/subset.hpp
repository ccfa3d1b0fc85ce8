#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spcls {

/// Fixed-width bit vector over an indexed universe. Element i of the
/// universe corresponds to bit i. All set operations are exact and stay
/// within the width; the width is part of the value.
class Subset {
public:
    Subset() = default;

    explicit Subset(std::size_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    static Subset full(std::size_t width) {
        Subset s(width);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ull;
        s.trim();
        return s;
    }

    /// Low 'width' bits of 'mask' become the members. Requires width <= 64.
    static Subset from_mask(std::size_t width, std::uint64_t mask);

    static Subset singleton(std::size_t width, std::size_t i) {
        Subset s(width);
        s.set(i);
        return s;
    }

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }

    std::size_t count() const;
    bool none() const;
    bool all() const { return count() == width_; }

    Subset operator&(const Subset& o) const;
    Subset operator|(const Subset& o) const;
    Subset operator-(const Subset& o) const;  // set difference
    Subset complement() const;                // within the universe

    Subset& operator&=(const Subset& o);
    Subset& operator|=(const Subset& o);

    bool operator==(const Subset& o) const = default;

    bool subset_of(const Subset& o) const;
    bool intersects(const Subset& o) const;

    /// Members as the low bits of one machine word. Requires width <= 64.
    std::uint64_t mask() const;

    std::vector<std::size_t> members() const;

    /// Index of the lowest member; width() when empty.
    std::size_t first() const;

    std::size_t hash() const;

    /// Canonical order: by cardinality, then by bit pattern read as a
    /// little-endian integer. Total order used for all emitted set lists.
    static bool canonical_less(const Subset& a, const Subset& b);

private:
    void trim();

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct SubsetHash {
    std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace spcls

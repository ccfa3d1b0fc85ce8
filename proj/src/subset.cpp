#include "spcls/subset.hpp"

#include <bit>
#include <stdexcept>

namespace spcls {

Subset Subset::from_mask(std::size_t width, std::uint64_t mask) {
    if (width > 64) throw std::invalid_argument("Subset::from_mask: width > 64");
    Subset s(width);
    if (width > 0) {
        std::uint64_t keep = width == 64 ? ~0ull : ((1ull << width) - 1);
        s.words_[0] = mask & keep;
    }
    return s;
}

std::size_t Subset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Subset::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

Subset Subset::operator&(const Subset& o) const {
    Subset r(*this);
    r &= o;
    return r;
}

Subset Subset::operator|(const Subset& o) const {
    Subset r(*this);
    r |= o;
    return r;
}

Subset Subset::operator-(const Subset& o) const {
    Subset r(*this);
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
}

Subset Subset::complement() const {
    Subset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
}

Subset& Subset::operator&=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Subset& Subset::operator|=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

bool Subset::subset_of(const Subset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool Subset::intersects(const Subset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::uint64_t Subset::mask() const {
    if (width_ > 64) throw std::invalid_argument("Subset::mask: width > 64");
    return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> Subset::members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            unsigned b = static_cast<unsigned>(std::countr_zero(w));
            out.push_back(wi * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

std::size_t Subset::first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi]) return wi * 64 + static_cast<unsigned>(std::countr_zero(words_[wi]));
    return width_;
}

std::size_t Subset::hash() const {
    std::size_t h = width_;
    for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull + w;
    return h;
}

bool Subset::canonical_less(const Subset& a, const Subset& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
}

void Subset::trim() {
    if (width_ % 64 != 0 && !words_.empty())
        words_.back() &= (1ull << (width_ % 64)) - 1;
}

}  // namespace spcls

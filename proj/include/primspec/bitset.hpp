#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace primspec {

/// Fixed-width dynamic bit set used for element subsets (ideals) and point
/// subsets (closed/open sets). Two sets are only comparable when they share
/// the same width.
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}
    BitSet(std::size_t width, std::initializer_list<std::size_t> members) : BitSet(width) {
        for (auto m : members) set(m);
    }

    static BitSet full(std::size_t width) {
        BitSet b(width);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t width() const noexcept { return width_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_full() const noexcept { return count() == width_; }

    bool is_subset_of(const BitSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool intersects(const BitSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    BitSet& operator|=(const BitSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    BitSet& operator&=(const BitSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitSet& operator-=(const BitSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    /// Complement relative to the width.
    BitSet complement() const {
        BitSet c = *this;
        for (auto& w : c.words_) w = ~w;
        c.trim();
        return c;
    }

    /// Smallest member, or width() when empty.
    std::size_t first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return width_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const BitSet& a, const BitSet& b) noexcept {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

    /// Canonical order: by cardinality, then lexicographically by sorted
    /// member list (the set holding the lowest differing index comes first).
    friend bool canonical_less(const BitSet& a, const BitSet& b) noexcept {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            auto diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                auto low = diff & (~diff + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    std::size_t hash() const noexcept {
        std::size_t h = width_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

private:
    void trim() noexcept {
        if (width_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitSetHash {
    std::size_t operator()(const BitSet& b) const noexcept { return b.hash(); }
};

}  // namespace primspec

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

#include "rsys/errors.hpp"

namespace rsys {

/// A subset of a background set, stored as a fixed-width bit vector.
/// Bit i corresponds to the entity with index i. Widths above 64 are
/// supported so that large constructed systems stay exact.
class state {
public:
    state() = default;

    explicit state(std::uint32_t width)
        : width_(width), words_((width + 63u) / 64u, 0u) {}

    /// The full set over a background of the given width.
    static state full(std::uint32_t width) {
        state s(width);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// Builds a state of the given width from the low bits of an integer.
    /// Entity 0 is the least significant bit. Requires width <= 64.
    static state from_index(std::uint32_t width, std::uint64_t bits) {
        assert(width <= 64);
        state s(width);
        if (width > 0) s.words_[0] = bits;
        s.trim();
        return s;
    }

    std::uint32_t width() const { return width_; }

    bool test(std::uint32_t i) const {
        assert(i < width_);
        return (words_[i >> 6] >> (i & 63u)) & 1u;
    }

    void set(std::uint32_t i) {
        assert(i < width_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63u);
    }

    void reset(std::uint32_t i) {
        assert(i < width_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63u));
    }

    std::uint32_t count() const {
        std::uint32_t n = 0;
        for (auto w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool any() const { return !none(); }

    state& operator|=(const state& o) {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    state& operator&=(const state& o) {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    /// Set difference: removes every member of `o`.
    state& operator-=(const state& o) {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend state operator|(state a, const state& b) { return a |= b; }
    friend state operator&(state a, const state& b) { return a &= b; }
    friend state operator-(state a, const state& b) { return a -= b; }

    state complement() const {
        state r(width_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool contains(const state& o) const {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (o.words_[k] & ~words_[k]) return false;
        return true;
    }

    bool is_subset_of(const state& o) const { return o.contains(*this); }

    bool intersects(const state& o) const {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool operator==(const state& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }

    bool operator!=(const state& o) const { return !(*this == o); }

    /// Numeric order of the underlying bit pattern (entity 0 least
    /// significant); this is the canonical enumeration order everywhere.
    bool operator<(const state& o) const {
        assert(width_ == o.width_);
        for (std::size_t k = words_.size(); k-- > 0;) {
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
        }
        return false;
    }

    /// The bit pattern as an integer. Requires width <= 64.
    std::uint64_t to_index() const {
        assert(width_ <= 64);
        return words_.empty() ? 0u : words_[0];
    }

    template <typename Fn>
    void for_each_member(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int b = std::countr_zero(w);
                fn(static_cast<std::uint32_t>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = width_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check_width(const state& o) const {
        if (width_ != o.width_)
            throw usage_error("state width mismatch: " + std::to_string(width_) +
                              " vs " + std::to_string(o.width_));
    }

    void trim() {
        const std::uint32_t extra = width_ & 63u;
        if (extra != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << extra) - 1;
        if (width_ == 0)
            for (auto& w : words_) w = 0;
    }

    std::uint32_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct state_hash {
    std::size_t operator()(const state& s) const { return s.hash(); }
};

} // namespace rsys

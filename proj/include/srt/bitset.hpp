#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace srt {

// Set of vertex indices as a little-endian word vector with trailing zero
// words trimmed, so equal sets compare equal regardless of how they were
// built.  Complexes up to 64 vertices stay in a single word; the subset
// sweeps extract raw words and never touch this class in hot loops.
class Bitset {
    std::vector<std::uint64_t> w_;

    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

public:
    Bitset() = default;

    static Bitset single(std::size_t i) {
        Bitset b;
        b.set(i);
        return b;
    }

    static Bitset first_n(std::size_t n) {
        Bitset b;
        for (std::size_t i = 0; i < n; ++i) b.set(i);
        return b;
    }

    static Bitset from_word(std::uint64_t w) {
        Bitset b;
        if (w) b.w_.push_back(w);
        return b;
    }

    void set(std::size_t i) {
        std::size_t word = i / 64;
        if (word >= w_.size()) w_.resize(word + 1, 0);
        w_[word] |= std::uint64_t{1} << (i % 64);
    }

    void reset(std::size_t i) {
        std::size_t word = i / 64;
        if (word < w_.size()) {
            w_[word] &= ~(std::uint64_t{1} << (i % 64));
            trim();
        }
    }

    bool test(std::size_t i) const {
        std::size_t word = i / 64;
        return word < w_.size() && (w_[word] >> (i % 64)) & 1;
    }

    bool empty() const { return w_.empty(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        if (w_.size() > o.w_.size()) return false;
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        std::size_t n = std::min(w_.size(), o.w_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend Bitset operator|(const Bitset& a, const Bitset& b) {
        Bitset r;
        r.w_.resize(std::max(a.w_.size(), b.w_.size()), 0);
        for (std::size_t i = 0; i < r.w_.size(); ++i) {
            if (i < a.w_.size()) r.w_[i] |= a.w_[i];
            if (i < b.w_.size()) r.w_[i] |= b.w_[i];
        }
        return r;
    }

    friend Bitset operator&(const Bitset& a, const Bitset& b) {
        Bitset r;
        r.w_.resize(std::min(a.w_.size(), b.w_.size()), 0);
        for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = a.w_[i] & b.w_[i];
        r.trim();
        return r;
    }

    // set difference a \ b
    friend Bitset operator-(const Bitset& a, const Bitset& b) {
        Bitset r = a;
        for (std::size_t i = 0; i < std::min(a.w_.size(), b.w_.size()); ++i) r.w_[i] &= ~b.w_[i];
        r.trim();
        return r;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) { return a.w_ == b.w_; }

    // Numeric order; for fixed cardinality this is colex order on sets.
    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size();
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t word = 0; word < w_.size(); ++word) {
            std::uint64_t w = w_[word];
            while (w) {
                int bit = std::countr_zero(w);
                out.push_back(static_cast<int>(word * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
        return out;
    }

    // Only valid when all members are < 64.
    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }
    std::size_t word_count() const { return w_.size(); }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : w_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace srt

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace misx {

// Fixed-width dynamic bitset over 64-bit words. All set algebra the graph
// kernels need (and nothing more). Two bitsets may be combined only if they
// were created with the same bit capacity.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~0ULL;
        b.trim();
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Index of the lowest set bit, or -1.
    int first() const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k << 6) + __builtin_ctzll(words_[k]);
        return -1;
    }

    // Lowest set bit strictly above `i`, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = words_[k] & (~0ULL << (i & 63));
        while (true) {
            if (w) return int(k << 6) + __builtin_ctzll(w);
            if (++k == words_.size()) return -1;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset minus(Bitset a, const Bitset& b) { return a.subtract(b); }

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return words_ != o.words_; }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ULL ^ uint64_t(nbits_);
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    std::vector<int32_t> to_vector() const {
        std::vector<int32_t> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int v = first(); v >= 0; v = next(v)) fn(v);
    }

private:
    void trim() {
        int r = nbits_ & 63;
        if (r && !words_.empty()) words_.back() &= (1ULL << r) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return size_t(b.hash()); }
};

}  // namespace misx

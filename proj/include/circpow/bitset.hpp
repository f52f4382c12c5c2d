#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace circpow {

// Dynamic bitset sized once at construction. Used for adjacency rows,
// vertex sets and solver domains.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    void fill() {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t(0));
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const = default;

    // Index of the first set bit at position >= from, or -1.
    int next(int from) const {
        if (from >= size_) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) return (w << 6) + __builtin_ctzll(cur);
            if (++w >= static_cast<int>(words_.size())) return -1;
            cur = words_[w];
        }
    }
    int first() const { return next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

private:
    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t(1) << (size_ & 63)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace circpow

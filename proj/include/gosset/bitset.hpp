// Fixed-capacity dynamic bitset used for vertex sets and adjacency rows.

#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace gosset {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int capacity() const { return bits_; }
    int wordCount() const { return static_cast<int>(words_.size()); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& andNot(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const { return bits_ == o.bits_ && words_ == o.words_; }

    int intersectionCount(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Lowest set bit at or above `from`, or -1.
    int nextSetBit(int from) const {
        if (from >= bits_) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (w << 6) + __builtin_ctzll(cur);
            if (++w >= wordCount()) return -1;
            cur = words_[w];
        }
    }

    template <typename F>
    void forEach(F&& f) const {
        for (int w = 0; w < wordCount(); ++w) {
            std::uint64_t cur = words_[w];
            while (cur) {
                f((w << 6) + __builtin_ctzll(cur));
                cur &= cur - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(bits_);
        for (std::uint64_t w : words_) h = h * 1099511628211ULL + w;
        return h;
    }

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gosset

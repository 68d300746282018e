#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace orchard {

/// Fixed-length bit vector packed into 64-bit words. Bits beyond size()
/// are kept zero so whole-word operations (xor, popcount, comparison)
/// need no tail handling.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void toggle(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// XORs another vector of the same length into this one.
    BitVec& operator^=(const BitVec& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }

    /// Index of the lowest set bit, or size() if none.
    std::size_t find_first() const;

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace orchard

#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rlm {

inline constexpr std::size_t kWordBits = 64;

// Fixed-width bit vector over 64-bit words, least-significant word first.
// Invariant: all bits at positions >= width are zero after every operation.
class BitVec {
public:
    explicit BitVec(std::size_t width, bool fill_ones = false)
        : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {
        if (width == 0)
            throw std::invalid_argument("BitVec: width must be >= 1");
        if (fill_ones) {
            for (auto& w : words_) w = ~std::uint64_t{0};
            mask_top();
        }
    }

    static BitVec zeros(std::size_t width) { return BitVec(width, false); }
    static BitVec ones(std::size_t width) { return BitVec(width, true); }

    std::size_t width() const { return width_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }

    void fill_zeros() {
        for (auto& w : words_) w = 0;
    }
    void fill_ones() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        mask_top();
    }

    // Shift every bit up by one; bit width-1 falls off, bit 0 becomes
    // inject_low. The only shift the transition formulas need.
    void shl1(bool inject_low) {
        if (words_.size() == 1) {
            words_[0] = (words_[0] << 1) | std::uint64_t{inject_low};
        } else {
            std::uint64_t carry = inject_low ? 1 : 0;
            for (auto& w : words_) {
                std::uint64_t next = w >> (kWordBits - 1);
                w = (w << 1) | carry;
                carry = next;
            }
        }
        mask_top();
    }

    BitVec& operator&=(const BitVec& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    void set_bit(std::size_t i) {
        assert(i < width_);
        words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    }
    bool test_bit(std::size_t i) const {
        assert(i < width_);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    bool test_high() const { return test_bit(width_ - 1); }
    bool is_zero() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

private:
    void mask_top() {
        std::size_t used = width_ % kWordBits;
        if (used != 0) words_.back() &= (~std::uint64_t{0}) >> (kWordBits - used);
    }

    std::size_t width_;
    std::vector<std::uint64_t> words_;

    friend void shl1_general(BitVec& v, bool inject_low);
};

// Generic carry-loop shift with no single-word specialization; the public
// shl1 must stay observationally identical to this.
inline void shl1_general(BitVec& v, bool inject_low) {
    std::uint64_t carry = inject_low ? 1 : 0;
    for (auto& w : v.words_) {
        std::uint64_t next = w >> (kWordBits - 1);
        w = (w << 1) | carry;
        carry = next;
    }
    v.mask_top();
}

}  // namespace rlm

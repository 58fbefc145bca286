#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace rmrll {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
/// Word padding beyond size() is kept zero so that whole-word comparison,
/// popcount and subset tests are valid without re-masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_(word_count(n), 0) {}

    /// Parses "0101..."; anything but '0'/'1' is rejected.
    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVector::from_string: bad character");
        }
        return v;
    }

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= bit;
        else
            w_[i >> 6] &= ~bit;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const {
        std::size_t s = 0;
        for (std::uint64_t x : w_) s += std::size_t(std::popcount(x));
        return s;
    }

    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }

    /// Index of the first set bit at position >= from, or -1 if none.
    int first_set(std::size_t from = 0) const {
        if (from >= n_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) return int((wi << 6) + std::size_t(std::countr_zero(cur)));
            if (++wi == w_.size()) return -1;
            cur = w_[wi];
        }
    }

    BitVector& operator^=(const BitVector& o) {
        require_same_size(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    BitVector& operator&=(const BitVector& o) {
        require_same_size(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    /// Bitwise complement over the first size() positions.
    BitVector complemented() const {
        BitVector r(*this);
        for (auto& x : r.w_) x = ~x;
        r.mask_tail();
        return r;
    }

    /// True iff every set bit of *this is also set in o.
    bool is_subset_of(const BitVector& o) const {
        require_same_size(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (int i = first_set(); i >= 0; i = first_set(std::size_t(i) + 1))
            s.push_back(std::size_t(i));
        return s;
    }

    bool operator==(const BitVector&) const = default;

    std::size_t words() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    void require_same_size(const BitVector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("BitVector: size mismatch");
    }

    void mask_tail() {
        if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace rmrll

#pragma once

#include <vector>

#include "rmrll/bitvec.hpp"

namespace rmrll::detail {

// Incremental GF(2) echelon basis: at most one stored vector per leading
// (lowest set) index. reduce() is exact span-membership elimination: a vector
// reduces to zero iff it lies in the current span.
class Echelon {
public:
    explicit Echelon(std::size_t len) : basis_(len) {}

    // Reduces v in place against the basis; returns the leading index of the
    // residual, or -1 when v reduced to zero.
    int reduce(BitVector& v) const {
        int lead = v.first_set();
        while (lead >= 0) {
            const BitVector& b = basis_[std::size_t(lead)];
            if (b.empty()) return lead;
            v ^= b;
            lead = v.first_set(std::size_t(lead) + 1);
        }
        return -1;
    }

    // Reduce-then-store. Returns the stored lead, or -1 if v was dependent.
    int insert(BitVector v) {
        int lead = reduce(v);
        if (lead >= 0) {
            basis_[std::size_t(lead)] = std::move(v);
            ++rank_;
        }
        return lead;
    }

    std::size_t rank() const { return rank_; }

private:
    std::vector<BitVector> basis_;  // empty slot = no vector with that lead
    std::size_t rank_ = 0;
};

} // namespace rmrll::detail

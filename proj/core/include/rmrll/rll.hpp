#pragma once

#include <optional>

#include "rmrll/bigint.hpp"
#include "rmrll/bitvec.hpp"

namespace rmrll {

/// Run-length constraint on binary sequences. d is the minimum number of 0s
/// between successive 1s; k (when finite) caps zero runs, with the usual
/// reading per family: for d >= 1 only runs between 1s are capped, while the
/// (0,k) constraint forbids any run of more than k consecutive 0s.
struct RllConstraint {
    int d = 0;
    std::optional<int> k;  // nullopt = unbounded

    static RllConstraint d_infinity(int d);
    static RllConstraint zero_k(int k);

    bool unbounded() const { return !k.has_value(); }
};

bool satisfies(const BitVector& v, const RllConstraint& c);

/// Exact number of constraint-satisfying sequences of length n, via the state
/// graph of the constraint. For (d,inf) this is the linear recurrence
/// T(n) = T(n-1) + T(n-d-1) with T(n) = n+1 for 0 <= n <= d.
BigInt count_sequences(int n, const RllConstraint& c);

/// log2 growth rate of count_sequences for a (d,inf) constraint: log2 of the
/// largest real root of x^(d+1) = x^d + 1, found by bisection on [1,2] to the
/// given root tolerance.
double noiseless_capacity(const RllConstraint& c, double tol = 1e-10);

/// Bitwise complement; v satisfies (0,1) iff complement(v) satisfies (1,inf).
BitVector complement(const BitVector& v);

} // namespace rmrll

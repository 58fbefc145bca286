#include "rmrll/rll.hpp"

#include <cmath>
#include <stdexcept>

namespace rmrll {

RllConstraint RllConstraint::d_infinity(int d) {
    if (d < 0) throw std::invalid_argument("RllConstraint: d must be >= 0");
    return RllConstraint{d, std::nullopt};
}

RllConstraint RllConstraint::zero_k(int k) {
    if (k < 0) throw std::invalid_argument("RllConstraint: k must be >= 0");
    return RllConstraint{0, k};
}

bool satisfies(const BitVector& v, const RllConstraint& c) {
    long first = -1, last = -1;
    for (int i = v.first_set(); i >= 0; i = v.first_set(std::size_t(i) + 1)) {
        if (last >= 0) {
            const long gap = i - last - 1;
            if (gap < c.d) return false;
            if (c.k && gap > *c.k) return false;
        } else {
            first = i;
        }
        last = i;
    }
    if (c.d == 0 && c.k) {
        // under the (0,k) reading runs at the borders count as well
        const long lead = (first >= 0) ? first : long(v.size());
        if (lead > *c.k) return false;
        if (last >= 0 && long(v.size()) - 1 - last > *c.k) return false;
    }
    return true;
}

namespace {

BigInt count_d_infinity(int n, int d) {
    // T(i) = T(i-1) + T(i-d-1), seeded with T(i) = i + 1 for 0 <= i <= d
    std::vector<BigInt> t(std::size_t(n) + 1);
    for (int i = 0; i <= std::min(n, d); ++i) t[std::size_t(i)] = i + 1;
    for (int i = d + 1; i <= n; ++i)
        t[std::size_t(i)] = t[std::size_t(i - 1)] + t[std::size_t(i - d - 1)];
    return t[std::size_t(n)];
}

BigInt count_finite_k(int n, const RllConstraint& c) {
    // state walk mirroring satisfies(): phase 0 = before the first 1 (run =
    // leading zeros), phase 1 = after a 1 (run = zeros since the last 1).
    // Runs saturate at k+1; a saturated run can still be a legal trailing run
    // when d >= 1, but may never be followed by another 1.
    const int k = *c.k;
    const int cap = k + 1;
    std::vector<BigInt> before(std::size_t(cap) + 1, 0), after(std::size_t(cap) + 1, 0);
    before[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> nb(std::size_t(cap) + 1, 0), na(std::size_t(cap) + 1, 0);
        for (int s = 0; s <= cap; ++s) {
            if (before[std::size_t(s)] != 0) {
                const int s0 = std::min(s + 1, cap);
                if (!(c.d == 0 && s0 > k))  // (0,k): a long leading run is already illegal
                    nb[std::size_t(s0)] += before[std::size_t(s)];
                na[0] += before[std::size_t(s)];  // first 1: no gap constraint yet
            }
            if (after[std::size_t(s)] != 0) {
                const int s0 = std::min(s + 1, cap);
                if (!(c.d == 0 && s0 > k))
                    na[std::size_t(s0)] += after[std::size_t(s)];
                if (s >= c.d && s <= k)  // closing a run between 1s
                    na[0] += after[std::size_t(s)];
            }
        }
        before.swap(nb);
        after.swap(na);
    }
    BigInt total = 0;
    for (int s = 0; s <= cap; ++s) {
        total += before[std::size_t(s)];
        total += after[std::size_t(s)];
    }
    return total;
}

} // namespace

BigInt count_sequences(int n, const RllConstraint& c) {
    if (n < 0) throw std::invalid_argument("count_sequences: negative length");
    if (c.k && *c.k < c.d) throw std::invalid_argument("count_sequences: need d <= k");
    if (n == 0) return 1;
    if (c.unbounded()) return count_d_infinity(n, c.d);
    return count_finite_k(n, c);
}

double noiseless_capacity(const RllConstraint& c, double tol) {
    if (tol <= 0) throw std::invalid_argument("noiseless_capacity: tol must be positive");
    if (!c.unbounded())
        throw std::invalid_argument("noiseless_capacity: only (d,inf) constraints supported");
    const int d = c.d;
    // largest real root of x^(d+1) - x^d - 1 lies in [1, 2]
    auto f = [d](double x) {
        double xd = std::pow(x, d);
        return xd * x - xd - 1.0;
    };
    double lo = 1.0, hi = 2.0;
    int iters = 0;
    while (hi - lo > tol) {
        if (++iters > 200) throw std::runtime_error("noiseless_capacity: bisection did not converge");
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return std::log2(0.5 * (lo + hi));
}

BitVector complement(const BitVector& v) { return v.complemented(); }

} // namespace rmrll

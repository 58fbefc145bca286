#pragma once

#include <optional>
#include <vector>

#include "rmrll/bigint.hpp"
#include "rmrll/bitvec.hpp"
#include "rmrll/rll.hpp"
#include "rmrll/rm.hpp"

namespace rmrll {

/// Standard normal complementary c.d.f. Q(t).
double q_function(double t);

/// Inverse of Q by bisection on the erfc-based Q, to absolute tolerance 1e-12
/// on the returned argument. Requires p in (0,1).
double q_inverse(double p);

/// Degree schedule r_m = max{ floor(m/2 + sqrt(m)/2 * Qinv(1-R)), 0 }, clamped to m.
int rate_degree(int m, double R);

/// z = ceil(log2(d+1)): the number of trailing variables whose product has its
/// support on every 2^z-th coordinate. Defined as 0 for d = 0.
int spacing_exponent(int d);

/// Parameters of the constrained subcode of RM(m, r_m): evaluations of
/// (x_{m-z+1} ... x_m) * g(x_1, ..., x_{m-z}) with deg(g) <= r_m - z.
struct SubcodeSpec {
    int d = 1;
    int m = 1;
    int z = 1;
    int r_m = 0;
    double target_rate = 0.5;  // R
    BigInt message_bits;       // binom(m-z, <= r_m-z); 0 when r_m < z (subcode {0})
};

/// Requires d >= 1 and m > z. When r_m < z the subcode degenerates to {0} and
/// message_bits is 0 rather than an error, so rate curves are total in m.
SubcodeSpec make_subcode_spec(int m, double R, int d);

/// Encoder for the constrained subcode. Message bits select monomials of
/// g in canonical order; multiplication by the trailing-variable product is
/// realized by placing g's evaluation on the arithmetic-progression support
/// {j : j = 2^z - 1 (mod 2^z)}. Every output satisfies the (d,inf) constraint.
class SubcodeEncoder {
public:
    explicit SubcodeEncoder(const SubcodeSpec& spec);

    const SubcodeSpec& spec() const { return spec_; }
    std::size_t message_bits() const { return g_rows_.size(); }
    std::size_t block_length() const { return std::size_t(1) << spec_.m; }

    BitVector encode(const BitVector& msg) const;

private:
    SubcodeSpec spec_;
    std::vector<BitVector> g_rows_;  // evaluations of the g-basis over 2^(m-z) points
};

/// Exact subcode rate binom(m-z, <= r_m-z) / 2^m and its limit R * 2^-z.
/// d = 0 is allowed and gives the rate of the full code RM(m, r_m).
struct SubcodeRate {
    int m = 0, d = 0, z = 0, r_m = 0;
    BigInt numerator;
    BigInt denominator;  // 2^m
    double value = 0.0;
    double asymptote = 0.0;  // R * 2^-z
};
SubcodeRate subcode_rate(int m, double R, int d);

/// Exhaustive count of constraint-satisfying codewords (the largest such
/// subcode is exactly this set). Listing returned only when count <= 10^4.
struct SubcodeCensus {
    BigInt count;
    std::optional<std::vector<BitVector>> listing;
};
SubcodeCensus largest_rll_subcode_bruteforce(const RmCode& code, const RllConstraint& c);

/// Counts codewords whose halves under plotkin_split satisfy
/// supp(g_eval) subseteq supp(h_eval) -- a necessary condition for membership
/// in the (1,inf) constrained set, so this always dominates the exact count.
BigInt support_filter_count(const RmCode& code);

} // namespace rmrll

#pragma once

#include <cstdint>
#include <vector>

#include "rmrll/bigint.hpp"
#include "rmrll/rm.hpp"

namespace rmrll {

/// Rate achieved by the (d,inf) constrained subcode construction: R * 2^-ceil(log2(d+1)).
double achievable_rate(double R, int d);

/// Upper bound on the rate of (1,inf) subcodes of the rate-R code sequence:
/// min{ 3R/8 + (1/2) ln(1/(1-R)), R }. The nontrivial branch applies below the
/// crossover rate; beyond it the trivial bound R takes over.
double subcode_rate_upper_bound(double R);

/// The crossover rate (~0.37) where the two branches meet: the root of
/// ln(1/(1-R)) = 5R/4 on (0.01, 0.99), by bisection to the given tolerance.
double upper_bound_crossover(double tol = 1e-9);

/// Exact binomial tail binom(m-t, <= r_m) / 2^(m-t) with r_m from the degree
/// schedule at m. Converges to R; the deviation is reported as a diagnostic.
struct BinomialTail {
    int m = 0, t = 0, r_m = 0;
    BigInt numerator;
    BigInt denominator;  // 2^(m-t)
    double value = 0.0;
    double deviation = 0.0;  // |value - R|
};
BinomialTail binomial_tail(int m, int t, double R);

/// Randomized check that every column subset V with |V| = 2^(m-u) satisfies
/// rank(G(m,r)[V]) > binom(m-u, <= r). Requires u >= 1 and m <= 12.
struct SubsetRankReport {
    int m = 0, r = 0, u = 0, samples = 0;
    bool all_hold = false;
    long min_margin = 0;  // smallest observed rank - binom(m-u, <= r)
};
SubsetRankReport subset_rank_check(int m, int r, int u, int samples, std::uint64_t seed);

/// log2 of the weight-distribution bound 2^(2 ln(1/(1-R)) w), subpolynomial
/// factors dropped.
double weight_count_log2_bound(double w, double R);

/// Enumerated log2 A(w) against the bound above, for every weight with A(w) > 0.
/// At small block lengths the dropped factors matter, so slack may be negative;
/// this is reported, not asserted.
struct WeightBoundRow {
    std::size_t w = 0;
    double log2_count = 0.0;
    double log2_bound = 0.0;
    double slack = 0.0;  // log2_bound - log2_count
};
std::vector<WeightBoundRow> weight_bound_table(const RmCode& code, double R);

/// Finite-m evaluation of the counting chain behind the rate upper bound, all
/// in log2 domain with subpolynomial/subexponential factors set to 1:
///   log2 M_u    = binom(m-1, <= r_m) - binom(m-1-u, <= r_m)
///   log2 B_i    = 2 ln(1/(1-R)) 2^(m-1-i)
///   log2 alpha  = binom(m-2, <= r_m) - 1
///   log2 beta   = log-sum-exp_i [ log2 B_i - binom(m-2-i, <= r_m) ],  i in [1, r_m-1]
///   log2 theta  = 2^(m-3) (4 ln(1/(1-R)) - R (1-delta))
///   log2 eta    = (1+delta) 2^(m-2) R
/// beta is additionally split at t_m = floor(m^(1/3)) into head (i <= t_m) and
/// tail (i > t_m) partial sums.
struct BoundEvaluation {
    int m = 0;
    double R = 0.0, delta = 0.0;
    int r_m = 0, t_m = 0;
    std::vector<double> log2_M;  // indexed by u = 0..m-1
    std::vector<double> log2_B;  // index i-1 holds B_i, i in [1, r_m-1]
    double log2_alpha = 0.0;
    double log2_beta = 0.0;
    double log2_beta_head = 0.0;
    double log2_beta_tail = 0.0;
    double log2_theta = 0.0;
    double log2_eta = 0.0;
};
BoundEvaluation evaluate_bound_chain(int m, double R, double delta = 0.1);

/// floor(m^(1/3)) computed in integers.
int cube_root_floor(int m);

/// Rate guaranteed by constrained subcodes of cosets of a capacity-achieving
/// code: max{C0 + C - 1, 0}.
double coset_baseline(double c0, double c);

} // namespace rmrll

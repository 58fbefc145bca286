#include "rmrll/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rmrll/channel.hpp"
#include "rmrll/subcode.hpp"

namespace rmrll {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log2(sum 2^x) with max extraction; exponents here reach 2^(m-2)
double log_sum_exp2(const std::vector<double>& xs) {
    double mx = kNegInf;
    for (double x : xs) mx = std::max(mx, x);
    if (mx == kNegInf) return kNegInf;
    double s = 0.0;
    for (double x : xs) s += std::exp2(x - mx);
    return mx + std::log2(s);
}

} // namespace

double achievable_rate(double R, int d) {
    if (!(R > 0.0 && R < 1.0)) throw std::invalid_argument("achievable_rate: R must be in (0,1)");
    if (d < 1) throw std::invalid_argument("achievable_rate: d must be >= 1");
    return std::ldexp(R, -spacing_exponent(d));
}

double subcode_rate_upper_bound(double R) {
    if (!(R > 0.0 && R < 1.0))
        throw std::invalid_argument("subcode_rate_upper_bound: R must be in (0,1)");
    const double nontrivial = 3.0 * R / 8.0 + 0.5 * std::log(1.0 / (1.0 - R));
    return std::min(nontrivial, R);
}

double upper_bound_crossover(double tol) {
    if (tol <= 0) throw std::invalid_argument("upper_bound_crossover: tol must be positive");
    auto f = [](double R) { return std::log(1.0 / (1.0 - R)) - 1.25 * R; };
    double lo = 0.01, hi = 0.99;  // f(lo) < 0 < f(hi)
    int iters = 0;
    while (hi - lo > tol) {
        if (++iters > 200) throw std::runtime_error("upper_bound_crossover: no convergence");
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

BinomialTail binomial_tail(int m, int t, double R) {
    if (!(m > t && t >= 0)) throw std::invalid_argument("binomial_tail: need m > t >= 0");
    BinomialTail out;
    out.m = m;
    out.t = t;
    out.r_m = rate_degree(m, R);
    out.numerator = binom_sum(m - t, out.r_m);
    out.denominator = BigInt(1) << (m - t);
    out.value = std::ldexp(out.numerator.convert_to<double>(), -(m - t));
    out.deviation = std::abs(out.value - R);
    return out;
}

SubsetRankReport subset_rank_check(int m, int r, int u, int samples, std::uint64_t seed) {
    if (u < 1 || u > m) throw std::invalid_argument("subset_rank_check: need 1 <= u <= m");
    if (m > 12) throw std::invalid_argument("subset_rank_check: m too large for dense ranks");
    const RmCode code(m, r);
    const std::size_t n = code.length();
    const std::size_t subset = n >> u;
    const long bound = binom_sum(m - u, r).convert_to<long>();

    SubsetRankReport rep;
    rep.m = m;
    rep.r = r;
    rep.u = u;
    rep.samples = samples;
    rep.all_hold = true;
    rep.min_margin = std::numeric_limits<long>::max();

    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t(0));
    for (int s = 0; s < samples; ++s) {
        RngStream rng(seed, std::uint64_t(s));
        // partial Fisher-Yates: the first `subset` entries become the sample
        for (std::size_t i = 0; i < subset; ++i) {
            const std::size_t j = i + std::size_t(rng.next_u64() % std::uint64_t(n - i));
            std::swap(all[i], all[j]);
        }
        std::vector<std::size_t> v(all.begin(), all.begin() + long(subset));
        const long rk = long(rank(code.generator().select_columns(v)));
        rep.min_margin = std::min(rep.min_margin, rk - bound);
        if (rk <= bound) rep.all_hold = false;
    }
    return rep;
}

double weight_count_log2_bound(double w, double R) {
    if (w < 0) throw std::invalid_argument("weight_count_log2_bound: negative weight");
    if (!(R > 0.0 && R < 1.0))
        throw std::invalid_argument("weight_count_log2_bound: R must be in (0,1)");
    return 2.0 * std::log(1.0 / (1.0 - R)) * w;
}

std::vector<WeightBoundRow> weight_bound_table(const RmCode& code, double R) {
    const WeightDistribution wd = weight_distribution(code);
    std::vector<WeightBoundRow> rows;
    for (std::size_t w = 0; w <= wd.n(); ++w) {
        if (wd.count(w) == 0) continue;
        WeightBoundRow row;
        row.w = w;
        row.log2_count = std::log2(double(wd.count(w)));
        row.log2_bound = weight_count_log2_bound(double(w), R);
        row.slack = row.log2_bound - row.log2_count;
        rows.push_back(row);
    }
    return rows;
}

int cube_root_floor(int m) {
    if (m < 0) throw std::invalid_argument("cube_root_floor: negative argument");
    int t = 0;
    while ((t + 1) * (t + 1) * (t + 1) <= m) ++t;
    return t;
}

BoundEvaluation evaluate_bound_chain(int m, double R, double delta) {
    if (m < 4) throw std::invalid_argument("evaluate_bound_chain: need m >= 4");
    if (!(R > 0.0 && R < 1.0))
        throw std::invalid_argument("evaluate_bound_chain: R must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("evaluate_bound_chain: delta must be in (0,1)");

    BoundEvaluation ev;
    ev.m = m;
    ev.R = R;
    ev.delta = delta;
    ev.r_m = rate_degree(m, R);
    ev.t_m = cube_root_floor(m);

    const double ln_term = std::log(1.0 / (1.0 - R));
    const double sb_m1 = binom_sum(m - 1, ev.r_m).convert_to<double>();

    ev.log2_M.resize(std::size_t(m));
    for (int u = 0; u < m; ++u)
        ev.log2_M[std::size_t(u)] = sb_m1 - binom_sum(m - 1 - u, ev.r_m).convert_to<double>();

    ev.log2_alpha = binom_sum(m - 2, ev.r_m).convert_to<double>() - 1.0;

    std::vector<double> head, tail, all;
    for (int i = 1; i <= ev.r_m - 1; ++i) {
        const double log2_b = 2.0 * ln_term * std::ldexp(1.0, m - 1 - i);
        ev.log2_B.push_back(log2_b);
        const double term = log2_b - binom_sum(m - 2 - i, ev.r_m).convert_to<double>();
        (i <= ev.t_m ? head : tail).push_back(term);
        all.push_back(term);
    }
    ev.log2_beta = log_sum_exp2(all);
    ev.log2_beta_head = log_sum_exp2(head);
    ev.log2_beta_tail = log_sum_exp2(tail);

    ev.log2_theta = std::ldexp(1.0, m - 3) * (4.0 * ln_term - R * (1.0 - delta));
    ev.log2_eta = (1.0 + delta) * std::ldexp(1.0, m - 2) * R;
    return ev;
}

double coset_baseline(double c0, double c) {
    if (!(c0 >= 0.0 && c0 <= 1.0 && c >= 0.0 && c <= 1.0))
        throw std::invalid_argument("coset_baseline: arguments must be in [0,1]");
    return std::max(c0 + c - 1.0, 0.0);
}

} // namespace rmrll

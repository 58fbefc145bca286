#include "rmrll/subcode.hpp"

#include <cmath>
#include <stdexcept>

#include "rmrll/errors.hpp"

namespace rmrll {

double q_function(double t) { return 0.5 * std::erfc(t / std::sqrt(2.0)); }

double q_inverse(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("q_inverse: p must be in (0,1)");
    if (p == 0.5) return 0.0;
    double lo = -40.0, hi = 40.0;  // Q(lo) ~ 1, Q(hi) ~ 0
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (q_function(mid) > p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

int rate_degree(int m, double R) {
    if (m < 1) throw std::invalid_argument("rate_degree: m must be >= 1");
    if (!(R > 0.0 && R < 1.0)) throw std::invalid_argument("rate_degree: R must be in (0,1)");
    double raw = 0.5 * m + 0.5 * std::sqrt(double(m)) * q_inverse(1.0 - R);
    // the q_inverse tolerance can push raw a hair below an exact integer
    // (e.g. R = 1/2, even m); snap so the floor is the mathematical one
    const double snapped = std::round(raw);
    if (std::abs(raw - snapped) < 1e-9) raw = snapped;
    long r = long(std::floor(raw));
    if (r < 0) r = 0;
    if (r > m) r = m;
    return int(r);
}

int spacing_exponent(int d) {
    if (d < 0) throw std::invalid_argument("spacing_exponent: d must be >= 0");
    int z = 0;
    while ((1 << z) < d + 1) ++z;  // z = ceil(log2(d+1))
    return z;
}

SubcodeSpec make_subcode_spec(int m, double R, int d) {
    if (d < 1) throw std::invalid_argument("make_subcode_spec: d must be >= 1");
    const int z = spacing_exponent(d);
    if (m <= z) throw std::invalid_argument("make_subcode_spec: need m > ceil(log2(d+1))");
    SubcodeSpec spec;
    spec.d = d;
    spec.m = m;
    spec.z = z;
    spec.r_m = rate_degree(m, R);
    spec.target_rate = R;
    spec.message_bits = binom_sum(m - z, spec.r_m - z);
    return spec;
}

SubcodeEncoder::SubcodeEncoder(const SubcodeSpec& spec) : spec_(spec) {
    if (spec.m > 26) throw guard_error("SubcodeEncoder: block length too large to materialize");
    if (spec.message_bits > (BigInt(1) << 20))
        throw guard_error("SubcodeEncoder: message space too large to materialize");
    if (spec.r_m >= spec.z) {
        const int mg = spec.m - spec.z;  // variables of g
        for (const Monomial& mono : rm_basis(mg, spec.r_m - spec.z))
            g_rows_.push_back(eval_monomial(mono, mg));
    }
    // r_m < z: the subcode is {0}; zero message bits, only the empty message
}

BitVector SubcodeEncoder::encode(const BitVector& msg) const {
    if (msg.size() != g_rows_.size())
        throw std::invalid_argument("SubcodeEncoder::encode: message length mismatch");
    const std::size_t half_count = std::size_t(1) << (spec_.m - spec_.z);
    BitVector g_eval(half_count);
    for (int i = msg.first_set(); i >= 0; i = msg.first_set(std::size_t(i) + 1))
        g_eval ^= g_rows_[std::size_t(i)];

    // place g's evaluation on the support of the trailing-variable product:
    // point i of the g-domain maps to index i * 2^z + (2^z - 1)
    BitVector cw(std::size_t(1) << spec_.m);
    const std::size_t step = std::size_t(1) << spec_.z;
    for (int i = g_eval.first_set(); i >= 0; i = g_eval.first_set(std::size_t(i) + 1))
        cw.set(std::size_t(i) * step + step - 1, true);
    return cw;
}

SubcodeRate subcode_rate(int m, double R, int d) {
    if (m < 1) throw std::invalid_argument("subcode_rate: m must be >= 1");
    if (d < 0) throw std::invalid_argument("subcode_rate: d must be >= 0");
    const int z = spacing_exponent(d);
    if (m < z) throw std::invalid_argument("subcode_rate: need m >= ceil(log2(d+1))");
    SubcodeRate out;
    out.m = m;
    out.d = d;
    out.z = z;
    out.r_m = rate_degree(m, R);
    out.numerator = binom_sum(m - z, out.r_m - z);
    out.denominator = BigInt(1) << m;
    out.value = std::ldexp(out.numerator.convert_to<double>(), -m);
    out.asymptote = std::ldexp(R, -z);
    return out;
}

SubcodeCensus largest_rll_subcode_bruteforce(const RmCode& code, const RllConstraint& c) {
    SubcodeCensus census;
    census.count = 0;
    std::vector<BitVector> found;
    bool keep_listing = true;
    for_each_codeword(code, [&](const BitVector& cw) {
        if (!satisfies(cw, c)) return;
        ++census.count;
        if (keep_listing) {
            if (found.size() < 10000)
                found.push_back(cw);
            else
                keep_listing = false;
        }
    });
    if (keep_listing) census.listing = std::move(found);
    return census;
}

BigInt support_filter_count(const RmCode& code) {
    BigInt count = 0;
    for_each_codeword(code, [&](const BitVector& cw) {
        const PlotkinParts parts = plotkin_split(cw);
        if (parts.g_eval.is_subset_of(parts.h_eval)) ++count;
    });
    return count;
}

} // namespace rmrll

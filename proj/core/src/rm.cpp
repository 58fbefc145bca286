#include "rmrll/rm.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmrll {

namespace {

void append_combinations(int m, int deg, std::vector<Monomial>& out) {
    // variable subsets of size deg in lexicographic order
    std::vector<int> cur(deg);
    for (int i = 0; i < deg; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(Monomial{cur});
        int i = deg - 1;
        while (i >= 0 && cur[i] == m - (deg - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < deg; ++j) cur[j] = cur[j - 1] + 1;
    }
}

} // namespace

std::vector<Monomial> rm_basis(int m, int r) {
    if (m < 0 || r < 0 || r > m) throw std::invalid_argument("rm_basis: need 0 <= r <= m");
    std::vector<Monomial> basis;
    basis.push_back(Monomial{});  // constant 1
    for (int deg = 1; deg <= r; ++deg) append_combinations(m, deg, basis);
    return basis;
}

std::vector<std::uint8_t> lex_point(std::size_t index, int m) {
    if (index >= (std::size_t(1) << m)) throw std::invalid_argument("lex_point: index out of range");
    std::vector<std::uint8_t> z(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) z[std::size_t(i)] = (index >> (m - 1 - i)) & 1u;
    return z;
}

std::size_t lex_index(const std::vector<std::uint8_t>& z) {
    std::size_t idx = 0;
    for (std::uint8_t b : z) idx = (idx << 1) | (b & 1u);
    return idx;
}

BitVector eval_monomial(const Monomial& mono, int m) {
    if (m < 0) throw std::invalid_argument("eval_monomial: negative m");
    const std::size_t n = std::size_t(1) << m;
    // z_j is bit (m - j) of the point index, so the monomial evaluates to 1
    // exactly where the index contains this mask.
    std::size_t mask = 0;
    for (int j : mono.vars) {
        if (j < 1 || j > m) throw std::invalid_argument("eval_monomial: variable out of range");
        mask |= std::size_t(1) << (m - j);
    }
    BitVector v(n);
    // ascending enumeration of exactly the indices containing the mask
    for (std::size_t idx = mask;; idx = (idx + 1) | mask) {
        v.set(idx, true);
        if (idx == n - 1) break;
    }
    return v;
}

RmCode::RmCode(int m, int r) : m_(m), r_(r) {
    if (m < 1) throw std::invalid_argument("RmCode: need m >= 1");
    if (r < 0 || r > m) throw std::invalid_argument("RmCode: need 0 <= r <= m");
    basis_ = rm_basis(m, r);
    gen_ = BitMatrix(basis_.size(), std::size_t(1) << m);
    for (std::size_t i = 0; i < basis_.size(); ++i) gen_.row(i) = eval_monomial(basis_[i], m);
}

BitVector RmCode::encode(const BitVector& msg) const {
    if (msg.size() != dim()) throw std::invalid_argument("RmCode::encode: message length mismatch");
    BitVector cw(length());
    for (int i = msg.first_set(); i >= 0; i = msg.first_set(std::size_t(i) + 1))
        cw ^= gen_.row(std::size_t(i));
    return cw;
}

PlotkinParts plotkin_split(const BitVector& c) {
    const std::size_t n = c.size();
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("plotkin_split: length must be a power of two >= 2");
    PlotkinParts parts{BitVector(n / 2), BitVector(n / 2)};
    for (std::size_t i = 0; i < n / 2; ++i) {
        const bool even = c.get(2 * i);
        const bool odd = c.get(2 * i + 1);
        if (even) parts.g_eval.set(i, true);
        if (even != odd) parts.h_eval.set(i, true);
    }
    return parts;
}

BitVector plotkin_merge(const BitVector& g_eval, const BitVector& h_eval) {
    if (g_eval.size() != h_eval.size())
        throw std::invalid_argument("plotkin_merge: half lengths differ");
    BitVector c(2 * g_eval.size());
    for (std::size_t i = 0; i < g_eval.size(); ++i) {
        const bool g = g_eval.get(i);
        if (g) c.set(2 * i, true);
        if (g != h_eval.get(i)) c.set(2 * i + 1, true);
    }
    return c;
}

WeightDistribution weight_distribution(const RmCode& code) {
    WeightDistribution wd(code.length());
    for_each_codeword(code, [&](const BitVector& cw) { ++wd.count(cw.weight()); });
    return wd;
}

BitMatrix shorten(const RmCode& code, const std::vector<std::size_t>& positions) {
    std::vector<std::size_t> pos = positions;
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (!pos.empty() && pos.back() >= code.length())
        throw std::invalid_argument("shorten: position out of range");

    // messages x with x * G[:, pos] = 0, i.e. the nullspace of the transposed
    // column-selected generator
    const BitMatrix cols = code.generator().select_columns(pos).transposed();
    SolutionSet sol = solve(cols, BitVector(cols.rows()));
    BitMatrix basis(0, code.length());
    for (const BitVector& msg : sol.nullspace) basis.append_row(code.encode(msg));
    return basis;
}

BigInt superset_count(const RmCode& code, const BitVector& g_eval) {
    if (g_eval.size() != code.length())
        throw std::invalid_argument("superset_count: length mismatch");
    const std::vector<std::size_t> supp = g_eval.support();
    if (supp.empty()) return BigInt(1) << code.dim();

    const BitMatrix cols = code.generator().select_columns(supp).transposed();
    BitVector ones(cols.rows());
    for (std::size_t i = 0; i < cols.rows(); ++i) ones.set(i, true);
    SolutionSet sol = solve(cols, ones);
    if (!sol.consistent()) return 0;
    return BigInt(1) << sol.nullspace.size();
}

} // namespace rmrll

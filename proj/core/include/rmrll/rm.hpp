#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "rmrll/bigint.hpp"
#include "rmrll/bitmat.hpp"
#include "rmrll/bitvec.hpp"
#include "rmrll/errors.hpp"

namespace rmrll {

/// Largest code dimension we are willing to enumerate exhaustively (2^28 codewords).
inline constexpr int kEnumerationGuard = 28;

/// Square-free monomial prod_{j in vars} x_j over variables x_1..x_m.
/// vars is strictly increasing and 1-based; the empty set is the constant 1.
struct Monomial {
    std::vector<int> vars;
    int degree() const { return int(vars.size()); }
    bool operator==(const Monomial&) const = default;
};

/// Canonical basis of RM(m, r): monomials ordered by degree, then
/// lexicographically on their variable lists.
std::vector<Monomial> rm_basis(int m, int r);

/// Evaluation points are ordered lexicographically with z_1 most significant:
/// index = sum_i z_i * 2^(m-i). Lexicographic order on points equals numeric
/// order on indices, and x_m is the fastest-toggling coordinate.
std::vector<std::uint8_t> lex_point(std::size_t index, int m);
std::size_t lex_index(const std::vector<std::uint8_t>& z);

/// Evaluation vector of a monomial over all 2^m points in lexicographic order.
/// Weight is 2^(m - degree). Accepts m = 0 (single evaluation point).
BitVector eval_monomial(const Monomial& mono, int m);

/// Reed-Muller code RM(m, r): evaluations of m-variate polynomials of degree <= r.
class RmCode {
public:
    RmCode(int m, int r);

    int m() const { return m_; }
    int r() const { return r_; }
    std::size_t length() const { return std::size_t(1) << m_; }
    std::size_t dim() const { return basis_.size(); }

    const std::vector<Monomial>& basis() const { return basis_; }
    const BitMatrix& generator() const { return gen_; }

    /// msg has dim() bits laid out in canonical basis order.
    BitVector encode(const BitVector& msg) const;

private:
    int m_, r_;
    std::vector<Monomial> basis_;
    BitMatrix gen_;
};

/// Visits every codeword exactly once in Gray-code order. f is called with a
/// reference that is only valid during the call. Refuses dim > kEnumerationGuard.
template <typename F>
void for_each_codeword(const RmCode& code, F&& f) {
    if (int(code.dim()) > kEnumerationGuard)
        throw guard_error("codeword enumeration refused: dimension exceeds guard");
    BitVector cw(code.length());
    f(static_cast<const BitVector&>(cw));
    const std::uint64_t total = std::uint64_t(1) << code.dim();
    for (std::uint64_t t = 1; t < total; ++t) {
        cw ^= code.generator().row(std::size_t(std::countr_zero(t)));
        f(static_cast<const BitVector&>(cw));
    }
}

/// Halves of a codeword under the coordinate pairing (z', 0), (z', 1):
/// g_eval(z') = c(z'0) and h_eval(z') = c(z'0) xor c(z'1), so that the
/// interleaving of g_eval and g_eval xor h_eval reconstructs c.
struct PlotkinParts {
    BitVector g_eval;
    BitVector h_eval;
};
PlotkinParts plotkin_split(const BitVector& c);
BitVector plotkin_merge(const BitVector& g_eval, const BitVector& h_eval);

/// Exact weight enumerator from exhaustive message enumeration.
class WeightDistribution {
public:
    explicit WeightDistribution(std::size_t n) : counts_(n + 1, 0) {}

    std::size_t n() const { return counts_.size() - 1; }
    std::uint64_t count(std::size_t w) const { return counts_[w]; }
    std::uint64_t& count(std::size_t w) { return counts_[w]; }

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : counts_) s += c;
        return s;
    }

    /// Smallest nonzero weight with a codeword, or n()+1 if none.
    std::size_t min_nonzero_weight() const {
        for (std::size_t w = 1; w < counts_.size(); ++w)
            if (counts_[w]) return w;
        return counts_.size();
    }

private:
    std::vector<std::uint64_t> counts_;
};

WeightDistribution weight_distribution(const RmCode& code);

/// Basis (as full-length codeword rows) of {c in code : c_i = 0 for all i in positions}.
/// The dimension equals dim(code) - rank of the column-selected generator.
BitMatrix shorten(const RmCode& code, const std::vector<std::size_t>& positions);

/// Number of codewords whose support contains supp(g_eval), computed from the
/// rank of the column-selected generator (no enumeration): solve the all-ones
/// constraint on those columns; 0 if inconsistent, else 2^(dim - rank).
BigInt superset_count(const RmCode& code, const BitVector& g_eval);

} // namespace rmrll

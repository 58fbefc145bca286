#include "rmrll/bitmat.hpp"

#include <utility>

#include "rmrll/errors.hpp"
#include "echelon.hpp"

namespace rmrll {

RowReduction row_reduce(const BitMatrix& m) {
    RowReduction res{m, {}};
    BitMatrix& a = res.rref;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t p = pivot_row;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        std::swap(a.row(pivot_row), a.row(p));
        for (std::size_t q = 0; q < a.rows(); ++q)
            if (q != pivot_row && a.get(q, c)) a.row(q) ^= a.row(pivot_row);
        res.pivots.push_back(c);
        ++pivot_row;
    }
    return res;
}

std::size_t rank(const BitMatrix& m) { return row_reduce(m).pivots.size(); }

SolutionSet solve(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: b.size() must equal A.rows()");

    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BitVector row(a.cols() + 1);
        const BitVector& src = a.row(i);
        for (int j = src.first_set(); j >= 0; j = src.first_set(std::size_t(j) + 1))
            row.set(std::size_t(j), true);
        row.set(a.cols(), b.get(i));
        aug.row(i) = std::move(row);
    }

    RowReduction red = row_reduce(aug);
    SolutionSet sol;
    if (!red.pivots.empty() && red.pivots.back() == a.cols()) {
        sol.kind = SolutionSet::Kind::Inconsistent;
        return sol;
    }

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;

    sol.particular = BitVector(a.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        sol.particular.set(red.pivots[i], red.rref.get(i, a.cols()));

    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(a.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            if (red.rref.get(i, f)) v.set(red.pivots[i], true);
        sol.nullspace.push_back(std::move(v));
    }

    sol.kind = sol.nullspace.empty() ? SolutionSet::Kind::Unique : SolutionSet::Kind::Affine;
    return sol;
}

std::vector<CoordinateStatus> determined_coordinates(
    const BitMatrix& generator, const std::vector<std::pair<std::size_t, bool>>& known) {
    const std::size_t k = generator.rows();
    const std::size_t n = generator.cols();

    // Columns augmented with the observed bit at index k. A dependency among
    // known columns whose observed bits do not cancel reduces to exactly the
    // augmentation bit, which certifies that no codeword agrees.
    auto column_at = [&](std::size_t pos, bool aug) {
        BitVector col(k + 1);
        for (std::size_t r = 0; r < k; ++r)
            if (generator.get(r, pos)) col.set(r, true);
        col.set(k, aug);
        return col;
    };

    detail::Echelon span(k + 1);
    for (const auto& [pos, bit] : known) {
        if (pos >= n) throw std::invalid_argument("determined_coordinates: position out of range");
        if (span.insert(column_at(pos, bit)) == int(k))
            throw inconsistent_error("determined_coordinates: known bits match no codeword");
    }

    std::vector<CoordinateStatus> status(n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVector col = column_at(i, false);
        int lead = span.reduce(col);
        if (lead < 0)
            status[i] = {true, false};
        else if (lead == int(k))
            status[i] = {true, true};
        // anything else: column outside the known-column span, so ambiguous
    }
    return status;
}

} // namespace rmrll

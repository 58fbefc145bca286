#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rmrll/bitvec.hpp"

namespace rmrll {

/// Row-major matrix over GF(2). Every row has length cols().
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.r_[i].set(i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return r_[i]; }
    BitVector& row(std::size_t i) { return r_[i]; }

    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }

    void append_row(BitVector v) {
        if (v.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
        r_.push_back(std::move(v));
        ++rows_;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (int j = r_[i].first_set(); j >= 0; j = r_[i].first_set(std::size_t(j) + 1))
                t.r_[std::size_t(j)].set(i, true);
        return t;
    }

    /// Submatrix keeping the given columns, in the given order.
    BitMatrix select_columns(const std::vector<std::size_t>& idx) const {
        BitMatrix s(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (r_[i].get(idx[j])) s.r_[i].set(j, true);
        return s;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> r_;
};

/// GF(2) rank via Gaussian elimination. Does not mutate the input.
std::size_t rank(const BitMatrix& m);

struct RowReduction {
    BitMatrix rref;                   // reduced row-echelon form, row space preserved
    std::vector<std::size_t> pivots;  // strictly increasing pivot column indices
};
RowReduction row_reduce(const BitMatrix& m);

/// Solution set of A x = b over GF(2), x of length A.cols().
struct SolutionSet {
    enum class Kind { Unique, Affine, Inconsistent };
    Kind kind = Kind::Inconsistent;
    BitVector particular;              // some solution (meaningful unless inconsistent)
    std::vector<BitVector> nullspace;  // independent basis of {x : A x = 0}

    bool consistent() const { return kind != Kind::Inconsistent; }
};
SolutionSet solve(const BitMatrix& a, const BitVector& b);

struct CoordinateStatus {
    bool determined = false;
    bool value = false;  // forced bit when determined
};

/// For a generator matrix and known coordinate values, decides which positions
/// take the same value in every codeword agreeing with the known bits.
/// Position i is determined exactly when column i lies in the GF(2) span of the
/// known columns; the forced value is then the matching combination of known bits.
/// Throws inconsistent_error when no codeword agrees with `known`.
std::vector<CoordinateStatus> determined_coordinates(
    const BitMatrix& generator,
    const std::vector<std::pair<std::size_t, bool>>& known);

} // namespace rmrll

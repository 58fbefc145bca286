#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "rmrll/bitmat.hpp"
#include "rmrll/errors.hpp"
#include "rmrll/rm.hpp"
#include "test_support.hpp"

using namespace rmrll;

TEST_CASE("bitvector basics") {
    BitVector v(70);
    CHECK(v.size() == 70);
    CHECK_FALSE(v.any());
    v.set(0, true);
    v.set(65, true);
    CHECK(v.weight() == 2);
    CHECK(v.first_set() == 0);
    CHECK(v.first_set(1) == 65);
    CHECK(v.first_set(66) == -1);
    CHECK(v.support() == std::vector<std::size_t>{0, 65});

    const BitVector c = v.complemented();
    CHECK(c.weight() == 68);
    CHECK(c.complemented() == v);

    CHECK(BitVector::from_string("0101") == [] {
        BitVector w(4);
        w.set(1, true);
        w.set(3, true);
        return w;
    }());
    CHECK_THROWS_AS((void)BitVector::from_string("01x"), std::invalid_argument);
    CHECK_THROWS_AS(v ^ BitVector(3), std::invalid_argument);
}

TEST_CASE("subset test keeps padding clean") {
    BitVector a = BitVector::from_string("0101");
    BitVector b = BitVector::from_string("0111");
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    // complement must not leak set bits into padding
    BitVector z(67);
    CHECK(z.complemented().weight() == 67);
}

TEST_CASE("rank on the stated cases") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 8)) == 0);

    // independent route for the RM(3,1) generator: size of its row space
    const RmCode code(3, 1);
    std::set<std::vector<std::size_t>> distinct;
    for (const BitVector& cw : testutil::row_space(code.generator())) distinct.insert(cw.support());
    CHECK(distinct.size() == 16);  // 2^4, so the 4 rows are independent
    CHECK(rank(code.generator()) == 4);
}

TEST_CASE("rank equals rank of the transpose") {
    RngStream rng(2024, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng.next_u64() % 64;
        const std::size_t c = 1 + rng.next_u64() % 64;
        const BitMatrix m = testutil::random_matrix(r, c, rng);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("row_reduce stated cases and idempotence") {
    const RowReduction id = row_reduce(BitMatrix::identity(3));
    CHECK(id.rref == BitMatrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    BitMatrix single(1, 3);
    single.row(0) = BitVector::from_string("110");
    const RowReduction s = row_reduce(single);
    CHECK(s.rref == single);
    CHECK(s.pivots == std::vector<std::size_t>{0});

    BitMatrix dep(3, 3);
    dep.row(0) = BitVector::from_string("110");
    dep.row(1) = BitVector::from_string("011");
    dep.row(2) = BitVector::from_string("101");  // sum of the first two
    const RowReduction d = row_reduce(dep);
    CHECK(d.pivots == std::vector<std::size_t>{0, 1});

    RngStream rng(7, 1);
    for (int trial = 0; trial < 25; ++trial) {
        const BitMatrix m =
            testutil::random_matrix(1 + rng.next_u64() % 20, 1 + rng.next_u64() % 20, rng);
        const BitMatrix once = row_reduce(m).rref;
        CHECK(row_reduce(once).rref == once);
    }
}

TEST_CASE("solve stated cases") {
    const SolutionSet u = solve(BitMatrix::identity(3), BitVector::from_string("101"));
    CHECK(u.kind == SolutionSet::Kind::Unique);
    CHECK(u.particular == BitVector::from_string("101"));

    const SolutionSet bad = solve(BitMatrix(2, 3), BitVector::from_string("10"));
    CHECK(bad.kind == SolutionSet::Kind::Inconsistent);

    BitMatrix a(1, 2);
    a.row(0) = BitVector::from_string("11");
    const SolutionSet aff = solve(a, BitVector::from_string("1"));
    CHECK(aff.kind == SolutionSet::Kind::Affine);
    REQUIRE(aff.nullspace.size() == 1);
    CHECK(aff.nullspace[0] == BitVector::from_string("11"));
    // enumerate all four candidates: exactly (10) and (01) solve it
    CHECK(aff.particular.weight() == 1);

    CHECK_THROWS_AS(solve(a, BitVector(2)), std::invalid_argument);
}

TEST_CASE("solve property: every reported solution satisfies the system") {
    RngStream rng(99, 3);
    int consistent_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng.next_u64() % 10;
        const std::size_t cols = 1 + rng.next_u64() % 10;
        const BitMatrix a = testutil::random_matrix(rows, cols, rng);
        const BitVector b = testutil::random_vector(rows, rng);
        const SolutionSet sol = solve(a, b);
        if (!sol.consistent()) continue;
        ++consistent_seen;

        auto apply = [&](const BitVector& x) {
            BitVector out(rows);
            for (std::size_t i = 0; i < rows; ++i) out.set(i, (a.row(i) & x).weight() % 2 == 1);
            return out;
        };
        CHECK(apply(sol.particular) == b);
        BitVector x = sol.particular;
        for (const BitVector& nv : sol.nullspace) {
            CHECK_FALSE(apply(nv).any());
            x ^= nv;  // walk through a nested combination
            CHECK(apply(x) == b);
        }
    }
    CHECK(consistent_seen > 10);
}

TEST_CASE("determined_coordinates stated cases") {
    const RmCode rep(2, 0);
    const auto all_one = determined_coordinates(rep.generator(), {{0, true}});
    for (const auto& st : all_one) {
        CHECK(st.determined);
        CHECK(st.value);
    }

    const RmCode rm21(2, 1);
    for (const auto& st : determined_coordinates(rm21.generator(), {}))
        CHECK_FALSE(st.determined);

    const auto forced =
        determined_coordinates(rm21.generator(), {{0, false}, {1, false}, {2, false}});
    CHECK(forced[3].determined);
    CHECK_FALSE(forced[3].value);

    CHECK_THROWS_AS(determined_coordinates(rep.generator(), {{0, true}, {1, false}}),
                    inconsistent_error);
    CHECK_THROWS_AS(determined_coordinates(rep.generator(), {{9, true}}), std::invalid_argument);
}

TEST_CASE("determined_coordinates agrees with brute force") {
    RngStream rng(515, 0);
    int checked = 0;
    while (checked < 1000) {
        const std::size_t k = 1 + rng.next_u64() % 8;
        const std::size_t n = k + rng.next_u64() % 12;
        const BitMatrix gen = testutil::random_matrix(k, n, rng);

        // known bits from a real codeword restricted to a random subset
        const BitVector msg = testutil::random_vector(k, rng);
        BitVector cw(n);
        for (std::size_t i = 0; i < k; ++i)
            if (msg.get(i)) cw ^= gen.row(i);
        std::vector<std::pair<std::size_t, bool>> known;
        for (std::size_t i = 0; i < n; ++i)
            if (rng.next_unit() < 0.5) known.push_back({i, cw.get(i)});

        const auto got = determined_coordinates(gen, known);
        const auto want = testutil::brute_force_determined(gen, known);
        REQUIRE(want.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(got[i].determined == want->determined[i]);
            if (got[i].determined) CHECK(got[i].value == want->value[i]);
        }
        ++checked;
    }
}

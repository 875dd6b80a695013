#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/errors.hpp"
#include "hopfcyc/linalg.hpp"
#include "test_util.hpp"

using namespace hopfcyc;
using testutil::Rng;

static SparseMatrix mat(int rows, int cols, std::vector<std::vector<long>> a) {
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (a[r][c]) m.add(r, c, Rat(a[r][c]));
    return m;
}

TEST_CASE("rref on proportional rows has rank 1") {
    auto m = mat(2, 2, {{1, 2}, {2, 4}});
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivot_cols == std::vector<int>{0});
}

TEST_CASE("rref identity") {
    auto r = rref(SparseMatrix::identity(3));
    CHECK(r.rank == 3);
}

TEST_CASE("rref rank matches fraction-free elimination oracle on random matrices") {
    Rng rng(20240817);
    for (int trial = 0; trial < 8; ++trial) {
        auto m = testutil::random_int_matrix(rng, 20, 20);
        CHECK(rank(m) == testutil::bareiss_rank(m));
    }
    // and on rectangular shapes
    for (int trial = 0; trial < 6; ++trial) {
        auto m = testutil::random_int_matrix(rng, 13, 7, -9, 9, 40);
        CHECK(rank(m) == testutil::bareiss_rank(m));
    }
}

TEST_CASE("kernel basis: zero map and identity") {
    SparseMatrix z(2, 3);
    CHECK(kernel_basis(z).size() == 3);
    CHECK(kernel_basis(SparseMatrix::identity(4)).empty());
}

TEST_CASE("kernel vectors multiply back to zero; rank-nullity") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = testutil::random_int_matrix(rng, (int)rng.range(1, 12), (int)rng.range(1, 12),
                                             -4, 4, 50);
        auto K = kernel_basis(m);
        CHECK((int)K.size() == m.cols() - rank(m));
        for (auto& v : K) CHECK(m.apply(v).empty());
    }
}

TEST_CASE("solve returns a pivot-minimal solution or detects inconsistency") {
    auto m = mat(2, 3, {{1, 1, 0}, {0, 0, 1}});
    auto x = solve(m, SparseVec{{0, Rat(3)}, {1, Rat(5)}});
    REQUIRE(x.has_value());
    CHECK(sv_sub(m.apply(*x), SparseVec{{0, Rat(3)}, {1, Rat(5)}}).empty());
    // inconsistent system
    auto m2 = mat(2, 1, {{1}, {2}});
    CHECK(!solve(m2, SparseVec{{0, Rat(1)}, {1, Rat(3)}}).has_value());
}

TEST_CASE("results independent of entry insertion order") {
    Rng rng(99);
    auto m1 = testutil::random_int_matrix(rng, 9, 9, -3, 3, 70);
    // re-assemble the same matrix inserting entries in reversed order
    SparseMatrix m2(9, 9);
    for (int c = 8; c >= 0; --c)
        for (auto it = m1.col(c).rbegin(); it != m1.col(c).rend(); ++it)
            m2.add(it->first, c, it->second);
    CHECK(m1 == m2);
    auto r1 = rref(m1), r2 = rref(m2);
    CHECK(r1.rows == r2.rows);
    CHECK(r1.pivot_cols == r2.pivot_cols);
}

TEST_CASE("cohomology_dim trivial slices") {
    // 0 -> Q -> 0
    ComplexSlice s{SparseMatrix(1, 0), SparseMatrix(0, 1)};
    CHECK(cohomology_dim(s) == 1);
    // d_out injective, d_in surjective onto its kernel: H = 0
    ComplexSlice s2{mat(2, 1, {{1}, {0}}), mat(1, 2, {{0, 1}})};
    CHECK(cohomology_dim(s2) == 0);
}

TEST_CASE("cohomology_dim rejects non-composable differentials") {
    ComplexSlice bad{SparseMatrix::identity(2), SparseMatrix::identity(2)};
    CHECK_THROWS_AS(cohomology_dim(bad), CompositeNotZero);
}

TEST_CASE("cohomology_dim matches explicit quotient-basis oracle on random nilpotent pairs") {
    Rng rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        int a = (int)rng.range(1, 7), b = (int)rng.range(1, 7), c = (int)rng.range(1, 7);
        auto d_out = testutil::random_int_matrix(rng, c, b, -3, 3, 50);
        // choose d_in with image inside ker(d_out): columns = kernel combinations
        auto K = kernel_basis(d_out);
        SparseMatrix d_in(b, a);
        for (int j = 0; j < a; ++j) {
            SparseVec col;
            for (auto& kv : K) sv_axpy(col, Rat((long)rng.range(-2, 2)), kv);
            d_in.set_col(j, col);
        }
        ComplexSlice s{d_in, d_out};
        CHECK(cohomology_dim(s) == testutil::quotient_dim_oracle(d_in, d_out));
    }
}

TEST_CASE("quotient presentations") {
    // ambient 3, relation e1 - e2: quotient dim 2
    auto q = quotient(3, {SparseVec{{0, Rat(1)}, {1, Rat(-1)}}});
    CHECK(q.dim() == 2);
    // relations spanning everything
    auto q2 = quotient(2, {sv_unit(0), sv_unit(1), SparseVec{{0, Rat(2)}, {1, Rat(3)}}});
    CHECK(q2.dim() == 0);
    // projection kills exactly the relations
    std::vector<SparseVec> rels = {SparseVec{{0, Rat(1)}, {2, Rat(5)}},
                                   SparseVec{{1, Rat(2)}, {3, Rat(-1)}}};
    auto q3 = quotient(4, rels);
    for (auto& r : rels) CHECK(q3.project(r).empty());
    // projection . section = id
    for (int j = 0; j < q3.dim(); ++j) CHECK(q3.project(q3.section(sv_unit(j))) == sv_unit(j));
    // section . projection - id has image in span(relations)
    RrefResult span = rref_rows(rels, 4);
    for (int c = 0; c < 4; ++c) {
        SparseVec diff = sv_sub(q3.section(q3.project(sv_unit(c))), sv_unit(c));
        CHECK(in_span(span, diff));
    }
}

TEST_CASE("pivot and representative columns partition the coordinates") {
    Rng rng(5);
    auto rels = testutil::random_int_matrix(rng, 6, 10, -2, 2, 40).to_rows();
    auto q = quotient(10, rels);
    std::vector<char> seen(10, 0);
    for (int p : q.pivot_cols) seen[p]++;
    for (int r : q.representative_cols) seen[r]++;
    for (int c = 0; c < 10; ++c) CHECK(seen[c] == 1);
}

TEST_CASE("cohomology space and induced maps") {
    // complex 0 -> Q^2 --0--> Q^2 -> 0 with identity chain map
    ComplexSlice s{SparseMatrix(2, 2), SparseMatrix(2, 2)};
    auto h = cohomology_space(s);
    CHECK(h.dim() == 2);
    auto ind = induced_on_cohomology(SparseMatrix::identity(2), h, h);
    CHECK(ind == SparseMatrix::identity(2));
}

TEST_CASE("dense fallback (when enabled) agrees with the sparse path") {
    Rng rng(321);
    for (int trial = 0; trial < 6; ++trial) {
        auto m = testutil::random_int_matrix(rng, 10, 12, -4, 4, 55);
        setenv("HOPFCYC_DENSE_THRESHOLD", "0", 1);
        int sparse = rank(m);
        setenv("HOPFCYC_DENSE_THRESHOLD", "64", 1);
        int dense = rank(m);
        setenv("HOPFCYC_DENSE_THRESHOLD", "0", 1);
        CHECK(sparse == dense);
        CHECK(sparse == testutil::bareiss_rank(m));
    }
}

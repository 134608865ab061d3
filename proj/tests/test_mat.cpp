#include <doctest.h>

#include "cdc/gf.hpp"
#include "cdc/mat.hpp"
#include "cdc/prng.hpp"

#include "util.hpp"

using namespace cdc;

TEST_CASE("identity and stacking") {
    GF gf(3);
    Mat i3 = Mat::identity(gf, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(i3.at(r, c) == (r == c ? 1u : 0u));

    Mcg64 rng(1);
    Mat a = random_mat(gf, 2, 3, rng), b = random_mat(gf, 2, 2, rng);
    Mat h = Mat::hstack(a, b);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 5);
    CHECK(h.at(1, 3) == b.at(1, 0));

    Mat c = random_mat(gf, 1, 3, rng);
    Mat v = Mat::vstack(a, c);
    CHECK(v.rows() == 3);
    CHECK(v.at(2, 2) == c.at(0, 2));
}

TEST_CASE("known echelon form over GF(2)") {
    GF gf(2);
    Mat a(gf, 3, 4);
    // rows: 0111, 1011, 1100
    uint32_t rows[3][4] = {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) a.at(r, c) = rows[r][c];
    std::vector<int> piv;
    int rank = a.rref_in_place(&piv);
    CHECK(rank == 2);
    CHECK(piv == std::vector<int>{0, 1});
    uint32_t want[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 1}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) CHECK(a.at(r, c) == want[r][c]);
}

TEST_CASE("rref properties on random matrices") {
    for (uint32_t q : {2u, 3u, 4u, 9u}) {
        CAPTURE(q);
        GF gf(q);
        Mcg64 rng(q * 77 + 5);
        for (int trial = 0; trial < 60; ++trial) {
            Mat a = random_mat(gf, 4, 7, rng);
            Mat r = a;
            int rk = r.rref_in_place();
            CHECK(rk == a.rank());
            CHECK(rk == a.transposed().rank());
            Mat r2 = r;
            CHECK(r2.rref_in_place() == rk);
            // Idempotent on the reduced rows.
            for (int i = 0; i < rk; ++i)
                for (int c = 0; c < 7; ++c) CHECK(r2.at(i, c) == r.at(i, c));
        }
    }
}

TEST_CASE("nullspace") {
    GF gf(4);
    Mcg64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Mat a = random_mat(gf, 3, 6, rng);
        Mat ns = a.nullspace();
        CHECK(a.rank() + ns.rows() == 6);
        for (int s = 0; s < ns.rows(); ++s)
            for (int i = 0; i < a.rows(); ++i) {
                uint32_t acc = 0;
                for (int j = 0; j < 6; ++j)
                    acc = gf.add(acc, gf.mul(a.at(i, j), ns.at(s, j)));
                CHECK(acc == 0);
            }
        CHECK(ns.rank() == ns.rows());
    }
}

TEST_CASE("residue rank against echelon pivots") {
    GF gf(3);
    Mcg64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Mat u = random_mat(gf, 3, 8, rng);
        std::vector<int> piv;
        int ru = u.rref_in_place(&piv);
        Mat ue(gf, ru, 8);
        for (int r = 0; r < ru; ++r)
            for (int c = 0; c < 8; ++c) ue.at(r, c) = u.at(r, c);

        Mat b = random_mat(gf, 4, 8, rng);
        Mat res = ue.reduce_rows_against(b, piv);
        CHECK(res.rank() == Mat::vstack(ue, b).rank() - ru);
    }
}

TEST_CASE("rebase relabels the field only") {
    GF a(9), b(9);
    Mcg64 rng(3);
    Mat m = random_mat(a, 3, 3, rng);
    Mat r = m.rebased(b);
    CHECK(&r.field() == &b);
    CHECK(r.data() == m.data());
}

TEST_CASE("lexicographic order") {
    GF gf(2);
    Mat a(gf, 1, 2), b(gf, 1, 2);
    b.at(0, 1) = 1;
    CHECK(a < b);
    CHECK_FALSE(b < a);
    CHECK_FALSE(a < a);
}

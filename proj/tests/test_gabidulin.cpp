#include <doctest.h>

#include <map>

#include "cdc/extfield.hpp"
#include "cdc/gabidulin.hpp"
#include "cdc/gf.hpp"
#include "cdc/prng.hpp"

#include "util.hpp"

using namespace cdc;

TEST_CASE("generator rows are frobenius powers of the polynomial basis") {
    GF g2(2);
    ExtField f(g2, 6);
    GabidulinCode gab = make_gabidulin(f, 5, 3);
    CHECK(gab.n == 5);
    CHECK(gab.delta == 3);
    CHECK(gab.dim == 3);
    REQUIRE(gab.gen.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(gab.gen[(size_t)i][(size_t)j] ==
                  f.frobenius(f.pow(f.gen(), (uint64_t)j), (uint32_t)i));
}

TEST_CASE("codewords are linear in the message") {
    GF g2(2);
    ExtField f(g2, 4);
    GabidulinCode gab = make_gabidulin(f, 4, 2);
    Mcg64 rng(21);
    for (int t = 0; t < 50; ++t) {
        std::vector<ExtField::Elem> m1(3), m2(3), ms(3);
        for (int i = 0; i < 3; ++i) {
            m1[(size_t)i] = rng.below(f.size());
            m2[(size_t)i] = rng.below(f.size());
            ms[(size_t)i] = f.add(m1[(size_t)i], m2[(size_t)i]);
        }
        auto c1 = gab.codeword(m1), c2 = gab.codeword(m2);
        auto cs = gab.codeword(ms);
        for (int j = 0; j < 4; ++j)
            CHECK(cs[(size_t)j] == f.add(c1[(size_t)j], c2[(size_t)j]));
    }
}

TEST_CASE("square rank histogram matches the closed form") {
    MrdCode code(2, 4, 4, 2);
    CHECK(code.size() == 4096);
    CHECK(code.enumerable());

    std::map<int, uint64_t> want{{0, 1}, {2, 525}, {3, 2250}, {4, 1320}};
    auto hist = rank_histogram(code);
    CHECK(hist == want);

    auto dist = rank_distribution(2, 4, 4, 2);
    REQUIRE(dist.size() == hist.size());
    for (auto& [r, cnt] : hist) CHECK(mpz_class((unsigned long)cnt) == dist[r]);
}

TEST_CASE("rectangular rank histogram matches the closed form") {
    MrdCode code(2, 6, 4, 2);
    CHECK(code.rows() == 6);
    CHECK(code.cols() == 4);
    CHECK(code.size() == 262144);

    std::map<int, uint64_t> want{{0, 1}, {2, 2205}, {3, 54810}, {4, 205128}};
    CHECK(rank_histogram(code) == want);

    auto dist = rank_distribution(2, 6, 4, 2);
    for (auto& [r, cnt] : want) CHECK(dist[r] == mpz_class((unsigned long)cnt));
}

TEST_CASE("wide shapes transpose internally but enumerate caller side") {
    MrdCode code(2, 4, 6, 2);
    CHECK(code.transposed());
    CHECK(code.rows() == 4);
    CHECK(code.cols() == 6);
    Mat w = code.word(12345);
    CHECK(w.rows() == 4);
    CHECK(w.cols() == 6);
    // Rank is transpose invariant, so the histogram must match the tall one.
    std::map<int, uint64_t> want{{0, 1}, {2, 2205}, {3, 54810}, {4, 205128}};
    CHECK(rank_histogram(code) == want);
}

TEST_CASE("span basis is a basis") {
    MrdCode code(2, 4, 4, 2);
    auto basis = code.span_basis();
    REQUIRE(basis.size() == 12);  // m (n - delta + 1)
    const GF& gf = code.base();
    Mat flat(gf, (int)basis.size(), 16);
    for (size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].rank() >= 2);  // nonzero codewords are MRD words
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                flat.at((int)i, 4 * r + c) = basis[i].at(r, c);
    }
    CHECK(flat.rank() == 12);
}

TEST_CASE("rank distribution sums to the code size") {
    auto dist = rank_distribution(3, 5, 4, 2);
    mpz_class total = 0;
    for (auto& [r, cnt] : dist) total += cnt;
    mpz_class want;
    mpz_ui_pow_ui(want.get_mpz_t(), 3, 15);  // q^{m(n-delta+1)}
    CHECK(total == want);
    CHECK(dist[0] == 1);
    CHECK(dist.count(1) == 0);  // no rank below delta
}

TEST_CASE("enumeration respects the cap") {
    MrdCode big(2, 8, 8, 2);  // 2^56 words
    CHECK_FALSE(big.enumerable());
    CHECK(big.size() == mpz_class("72057594037927936"));
}

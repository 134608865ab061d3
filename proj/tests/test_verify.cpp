#include <doctest.h>

#include "cdc/constructions.hpp"
#include "cdc/mat.hpp"
#include "cdc/prng.hpp"
#include "cdc/subspace.hpp"
#include "cdc/verify.hpp"

#include "util.hpp"

using namespace cdc;

TEST_CASE("exhaustive pass") {
    SubspaceCode code = lift_mrd(2, 6, 3, 2);
    REQUIRE(code.size() == 64);
    VerifyReport rep = verify_cdc(code.words, 4);
    CHECK(rep.pass);
    CHECK(rep.mode == "exhaustive");
    CHECK(rep.pairs_checked == 64 * 63 / 2);
    CHECK_FALSE(rep.counterexample.has_value());
    CHECK(rep.cross_checked_pairs == 1000);
    CHECK(rep.required_distance == 4);
}

TEST_CASE("exhaustive counterexample is the lexicographic first") {
    SubspaceCode code = lift_mrd(2, 6, 3, 2);
    std::vector<Subspace> words = code.words;
    words.push_back(words[50]);  // plant a duplicate late in the scan
    for (int threads : {1, 4}) {
        CAPTURE(threads);
        VerifyReport rep = verify_cdc(words, 4, 0, 0x766459, threads);
        CHECK_FALSE(rep.pass);
        REQUIRE(rep.counterexample.has_value());
        CHECK(rep.counterexample->first == 50);
        CHECK(rep.counterexample->second == 64);
        CHECK(rep.counterexample_distance == 0);
    }
}

TEST_CASE("near miss distances are measured exactly") {
    GF gf(2);
    Mcg64 rng(8);
    Mat a = random_mat(gf, 3, 4, rng);
    Mat b = a;
    b.at(0, 0) ^= 1;  // rank-1 perturbation
    std::vector<Subspace> words{lift_to_subspace(a), lift_to_subspace(b)};
    VerifyReport rep = verify_cdc(words, 4);
    CHECK_FALSE(rep.pass);
    CHECK(rep.counterexample_distance == 2);
}

TEST_CASE("sampled mode finds a planted global violation") {
    GF gf(2);
    Mcg64 rng(12);
    Mat a = random_mat(gf, 3, 5, rng);
    Mat b = a;
    b.at(1, 2) ^= 1;
    std::vector<Subspace> words{lift_to_subspace(a), lift_to_subspace(b)};
    VerifyReport rep = verify_cdc(words, 4, 50, 99);
    CHECK(rep.mode == "sampled");
    CHECK_FALSE(rep.pass);
    CHECK(rep.seed == 99);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample_distance == 2);
}

TEST_CASE("sampled mode passes a clean code") {
    SubspaceCode code = parallel_construct(2, 8, 4, 2, GrmcMode::Filter);
    VerifyReport rep = verify_cdc(code.words, 4, 20000, 7);
    CHECK(rep.pass);
    CHECK(rep.pairs_checked == 20000);
    CHECK(rep.samples_requested == 20000);
}

TEST_CASE("tiny inputs") {
    SubspaceCode code = lift_mrd(2, 6, 3, 2);
    std::vector<Subspace> one{code.words[0]};
    VerifyReport rep = verify_cdc(one, 4);
    CHECK(rep.pass);
    CHECK(rep.pairs_checked == 0);
}

TEST_CASE("lifted subset certificate") {
    SubspaceCode code = parallel_construct(2, 8, 4, 2, GrmcMode::Filter);
    CHECK(verify_lifted_subset(code, 2).pass);

    // Remove one lifted word: the count and the linearity both break.
    SubspaceCode broken = code;
    broken.words.erase(broken.words.begin() + 100);
    CHECK_FALSE(verify_lifted_subset(broken, 2).pass);

    // Demand a rank floor the companion block does not have.
    CHECK_FALSE(verify_lifted_subset(code, 3).pass);
}

TEST_CASE("structure verifier flags tampered groups") {
    SubspaceCode code = parallel_construct(2, 8, 4, 2, GrmcMode::Filter);
    REQUIRE(verify_multilevel_structure(code, 1 << 12).pass);

    SUBCASE("companion rank above the window") {
        SubspaceCode t = code;
        const GF& gf = *t.field;
        Mat b(gf, 4, 4);
        for (int i = 0; i < 3; ++i) b.at(i, i) = 1;  // rank 3 > t2 = 2
        Mat id = Mat::identity(gf, 4);
        t.words[t.groups[1].begin] = Subspace::from_span(Mat::hstack(b, id));
        CHECK_FALSE(verify_multilevel_structure(t, 1 << 12).pass);
    }

    SUBCASE("group metadata out of step with the words") {
        SubspaceCode t = code;
        t.groups[0].idvec = {1, 1, 1, 0, 1, 0, 0, 0};
        CHECK_FALSE(verify_multilevel_structure(t, 1 << 12).pass);
    }

    SUBCASE("claimed pivot weight too optimistic") {
        SubspaceCode t = code;
        t.certified_s = 3;  // re-derivation yields 4
        CHECK_FALSE(verify_multilevel_structure(t, 1 << 12).pass);
    }

    SUBCASE("ranges must tile") {
        SubspaceCode t = code;
        t.groups[1].begin += 1;
        CHECK_FALSE(verify_multilevel_structure(t, 1 << 12).pass);
    }

    SUBCASE("within group duplicate") {
        SubspaceCode t = code;
        t.words[t.groups[1].begin] = t.words[t.groups[1].begin + 1];
        CHECK_FALSE(verify_multilevel_structure(t, 1 << 12).pass);
    }
}

TEST_CASE("structure verifier needs group metadata") {
    SubspaceCode code = lift_mrd(2, 6, 3, 2);
    code.groups.clear();
    CHECK_FALSE(verify_multilevel_structure(code, 1 << 10).pass);
}

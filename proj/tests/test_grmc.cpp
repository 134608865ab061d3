#include <doctest.h>

#include "cdc/gaussian.hpp"
#include "cdc/grmc.hpp"

using namespace cdc;

TEST_CASE("window counts from the rank distribution") {
    CHECK(grmc_lower_bound(2, 4, 4, 2, 0, 2) == 526);
    CHECK(grmc_lower_bound(2, 6, 4, 2, 0, 2) == 2206);
    CHECK(grmc_lower_bound(2, 4, 6, 2, 0, 2) == 2206);  // orientation free
    // t2 >= delta is a straight sum over the distribution.
    auto dist = rank_distribution(2, 6, 4, 2);
    CHECK(grmc_lower_bound(2, 6, 4, 2, 0, 3) == dist[0] + dist[2] + dist[3]);
    CHECK(grmc_lower_bound(2, 6, 4, 2, 2, 4) == dist[2] + dist[3] + dist[4]);
    // Ceilings past min(m, n) clamp.
    CHECK(grmc_lower_bound(2, 6, 4, 2, 0, 9) == grmc_lower_bound(2, 6, 4, 2, 0, 4));
}

TEST_CASE("coset pigeonhole counts") {
    CHECK(grmc_lower_bound(2, 5, 5, 2, 0, 1) == 31);
    CHECK(grmc_lower_bound(3, 8, 5, 2, 0, 1) == 121);
    CHECK(grmc_lower_bound(3, 5, 8, 2, 0, 1) == 121);
    // Degenerate window below every achievable rank still admits one word.
    CHECK(grmc_lower_bound(2, 4, 6, 3, 0, 1) == 1);
    // Empty window [t1 > t2] contributes nothing.
    CHECK(grmc_lower_bound(2, 4, 4, 3, 2, 1) == 0);
}

TEST_CASE("filter construction meets its count") {
    GrmcCode c = grmc_filter_construct(2, 4, 4, 2, 0, 2);
    CHECK(c.method == "filter");
    CHECK(c.words.size() == 526);
    for (const Mat& w : c.words) {
        CHECK(w.rows() == 4);
        CHECK(w.cols() == 4);
        CHECK(w.rank() <= 2);
    }
    auto rep = grmc_verify(c);
    CHECK(rep.pass());
    CHECK(rep.words == 526);
    CHECK(rep.min_pair_rank >= 2);
}

TEST_CASE("filter construction in caller orientation") {
    GrmcCode c = grmc_filter_construct(2, 4, 6, 2, 0, 2);
    CHECK(c.words.size() == 2206);
    CHECK(c.params.m == 4);
    CHECK(c.params.n == 6);
    for (const Mat& w : c.words) {
        REQUIRE(w.rows() == 4);
        REQUIRE(w.cols() == 6);
    }
    CHECK(grmc_verify(c).pass());
}

TEST_CASE("coset construction under the rank floor") {
    // Window tops out below delta, so filtering is impossible; a coset of
    // the distance-delta subcode inside a distance-a code does it.
    GrmcCode c = grmc_coset_construct(2, 5, 5, 2, 0, 1, 1);
    CHECK(c.method == "coset");
    CHECK(c.words.size() >= 31);
    CHECK_FALSE(c.sampled);
    for (const Mat& w : c.words) CHECK(w.rank() <= 1);
    auto rep = grmc_verify(c);
    CHECK(rep.pass());
    CHECK(rep.min_pair_rank >= 2);
}

TEST_CASE("coset construction at a window only one word wide") {
    GrmcCode c = grmc_coset_construct(2, 4, 6, 3, 0, 1, 1);
    CHECK(c.words.size() >= 1);
    CHECK(grmc_verify(c).pass());
}

TEST_CASE("verifier flags injected violations") {
    GrmcCode c = grmc_filter_construct(2, 4, 4, 2, 0, 2);

    GrmcCode dup = c;
    dup.words.push_back(dup.words[3]);  // distance zero pair
    auto rep = grmc_verify(dup);
    CHECK(rep.ranks_ok);
    CHECK_FALSE(rep.distance_ok);
    CHECK_FALSE(rep.pass());

    GrmcCode high = c;
    high.words.push_back(Mat::identity(high.words[0].field(), 4));  // rank 4
    rep = grmc_verify(high);
    CHECK_FALSE(rep.ranks_ok);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS(grmc_filter_construct(2, 4, 4, 3, 0, 2));  // t2 < delta
    CHECK_THROWS(grmc_coset_construct(2, 4, 4, 2, 0, 2, 1));  // t2 >= delta
    CHECK_THROWS(grmc_coset_construct(2, 5, 5, 3, 0, 2, 3));  // a > t2
}

TEST_CASE("parameter reduction") {
    // Deleting i rows and j columns costs max(i, j) in distance and rank
    // floor and clips the ceiling to the surviving shape.
    GrmcParams p{2, 6, 5, 3, 2, 4};
    GrmcParams r = grmc_upper_bound_reduce(p, 1, 2);
    CHECK(r.m == 5);
    CHECK(r.n == 3);
    CHECK(r.delta == 1);
    CHECK(r.t1 == 0);
    CHECK(r.t2 == 3);
    CHECK_THROWS(grmc_upper_bound_reduce(p, 3, 0));  // i beyond min(delta-1, t1)
}

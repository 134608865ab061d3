// Rank-restricted MRD codes: subsets of m x n matrices over GF(q) whose
// pairwise difference has rank at least delta while every member's own rank
// lies in a window [t1, t2].
//
// Two constructions are implemented.  When t2 >= delta, filtering an MRD
// code by rank already achieves the count predicted by the rank
// distribution.  When t2 < delta no MRD codeword survives the filter;
// instead we take the Gabidulin code G[m x n, a] for some a <= t2 < delta,
// split its generator into the sub-generator of D1 = G[m x n, delta] (first
// n - delta + 1 rows) and the remaining delta - a rows spanning a direct
// complement D2, and pick the coset of D1 inside G[m x n, a] that retains
// the most words with ranks in the window.  Differences inside a coset fall
// in D1 minus zero, so the rank distance stays >= delta.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cdc/gabidulin.hpp"
#include "cdc/mat.hpp"

namespace cdc {

struct GrmcParams {
    uint32_t q;
    int m, n;
    int delta;
    int t1, t2;
};

struct GrmcCode {
    GrmcParams params;
    std::string method;  // "filter" or "coset"
    // Coset search bookkeeping: when the number of candidate cosets exceeds
    // the exhaustive cap the search draws a seeded sample instead and the
    // result is only a best-found, flagged here.
    bool sampled = false;
    uint64_t seed = 0;
    uint64_t coset_index = 0;  // message of the winning D2 offset

    std::vector<Mat> words;

    // Keeps the field tower the word matrices point into alive.
    std::shared_ptr<const void> fields;
};

// Count guaranteed by the rank distribution: for t2 >= delta the exact
// number of MRD[m x n, delta] words with rank in [t1, min(t2, min(m,n))];
// for t2 < delta the best pigeonhole coset count over the admissible
// sub-distances a, never less than 1 (a single fixed matrix always works).
mpz_class grmc_lower_bound(uint32_t q, int m, int n, int delta, int t1, int t2);

// Pre: t2 >= delta and MRD[m x n, delta] enumerable.
GrmcCode grmc_filter_construct(uint32_t q, int m, int n, int delta, int t1,
                               int t2);

// Pre: max(1, t1) <= t2 < delta and 1 <= a <= t2.  Searches cosets
// exhaustively up to 2^16 of them, otherwise samples 2^12 seeded draws.
GrmcCode grmc_coset_construct(uint32_t q, int m, int n, int delta, int t1,
                              int t2, int a, uint64_t seed = 0x637365);

struct GrmcVerifyReport {
    bool ranks_ok = false;      // every word rank within [t1, t2]
    bool distance_ok = false;   // pairwise difference rank >= delta
    size_t words = 0;
    uint64_t pairs_checked = 0;
    int min_pair_rank = -1;     // smallest difference rank seen (-1: no pairs)
    bool pass() const { return ranks_ok && distance_ok; }
};

GrmcVerifyReport grmc_verify(const GrmcCode& code);

// Parameter reduction behind the Singleton-style upper bound: deleting the
// first i rows and first j columns maps a rank-window code with distance
// delta to one with the returned parameters.  Pre: 0 <= i, j <= min(delta-1,
// t1).
GrmcParams grmc_upper_bound_reduce(const GrmcParams& p, int i, int j);

}  // namespace cdc

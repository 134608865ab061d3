// Checking constructed codes against their claimed parameters.
//
// verify_cdc certifies the pairwise minimum distance, either over every
// pair (lexicographic order, first offender reported, parallel scan that
// normalizes to the smallest failing pair) or over a seeded sample of
// pairs.  A slice of the checked pairs is re-measured through the explicit
// intersection-basis formula so the two distance evaluations guard each
// other.
//
// The structural verifiers re-derive what the constructions claim to have
// emitted: the lifted block of a code (count, linearity and rank floor of
// the extracted companion matrices) and the grouping of a multilevel code
// (identifying vectors, filler diagrams, filler rank floors, cross-group
// Hamming distances).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdc/constructions.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

struct VerifyReport {
    std::string mode;  // "exhaustive" or "sampled"
    bool pass = false;
    int required_distance = 0;
    uint64_t pairs_checked = 0;
    uint64_t samples_requested = 0;  // sampled mode
    uint64_t seed = 0;               // sampled mode
    int threads = 1;
    // Smallest failing pair in lexicographic order (exhaustive) or first
    // failing draw (sampled), with its actual distance.
    std::optional<std::pair<uint64_t, uint64_t>> counterexample;
    int counterexample_distance = -1;
    uint64_t cross_checked_pairs = 0;  // intersection-formula agreement
    double seconds = 0.0;
    std::vector<std::string> notes;
};

// Exhaustive scan when samples == 0, otherwise a seeded sample of pair
// draws.  threads <= 0 picks the hardware count; the CDC_THREADS
// environment variable caps it in the CLI.
VerifyReport verify_cdc(const std::vector<Subspace>& words, int d,
                        uint64_t samples = 0, uint64_t seed = 0x766459,
                        int threads = 1);

struct StructureReport {
    bool pass = true;
    std::vector<std::string> checks;

    void ok(const std::string& what) { checks.push_back("ok: " + what); }
    void fail(const std::string& what) {
        pass = false;
        checks.push_back("FAIL: " + what);
    }
};

// Certifies that the code contains the full lifted MRD block: exactly
// q^{(n-k)(k-delta+1)} words with pivots 0..k-1, whose companion matrices
// form a linear space with nonzero ranks >= delta.
StructureReport verify_lifted_subset(const SubspaceCode& code, int delta);

// Re-derives the group structure of a multilevel or combined code:
// identifying vectors, filler diagrams against the echelon patterns,
// within-group distances (exhaustive for small groups, filler-linearity
// plus rank-floor plus sampled agreement for large ones), right-side lift
// groups via extracted companion matrices, and cross-group distances by
// Hamming floors plus a seeded sample of cross_samples checked pairs.
StructureReport verify_multilevel_structure(const SubspaceCode& code,
                                            uint64_t cross_samples = 1 << 20,
                                            uint64_t seed = 0x6d6c76);

}  // namespace cdc

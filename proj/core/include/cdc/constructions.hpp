// Constant dimension code constructions.
//
// A constant dimension code is a set of k-dimensional subspaces of GF(q)^n
// with pairwise subspace distance >= d (always even here, d = 2 delta).
// Four families are built:
//
//   lifted      rowspace(I_k | A) over an MRD code, the classical lift;
//   parallel    the lift plus rank-window matrices lifted on the right,
//               rowspace(B | I_k);
//   multilevel  one echelon pattern per identifying vector, each filled
//               with a diagram rank-metric code;
//   new         the lift, a right-side rank-window lift, and two mixed
//               echelon patterns whose fillers come from shortened or
//               paired MRD codes;
//   comb        a multilevel base joined with a right-side rank-window
//               lift sized against the base's certified pivot weight.
//
// Every construction records its parts as groups (index ranges plus the
// pattern and filler that generated them) so the structural verifier can
// re-derive and re-check each part independently.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cdc/ferrers.hpp"
#include "cdc/gf.hpp"
#include "cdc/grmc.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

using FieldPtr = std::shared_ptr<const GF>;
FieldPtr make_field(uint32_t q);

struct SubspaceCode {
    uint32_t q = 0;
    int n = 0, k = 0, d = 0;  // designed minimum subspace distance
    std::string construction;
    std::vector<Subspace> words;

    struct Group {
        std::string label;
        // Identifying vector shared by all words of the group; empty for
        // mixed-pivot groups (right-side lifts).
        std::vector<uint8_t> idvec;
        size_t begin = 0, end = 0;
        // Filler code the group was generated from, when it came out of an
        // echelon pattern.
        std::shared_ptr<const FdrmCode> filler;
        // Rank window of the right-side lift groups.
        int t1 = 0, t2 = -1;
        int rank_distance = 0;  // designed rank distance of the fillers
    };
    std::vector<Group> groups;

    // Smallest number of pivots any identifying-vector group packs into the
    // first n - k coordinates; -1 when no such group exists.  Groups whose
    // pivot weight falls short of delta plus a companion's rank ceiling must
    // offer delta zero-tail rows instead.
    int certified_s = -1;

    FieldPtr field;

    size_t size() const { return words.size(); }
};

// rowspace(I_k | A) for every A in a full-rectangle diagram code equal to
// MRD[k x (n-k), delta] up to a rank-preserving reflection, enumerated in
// the code's canonical basis order.  Pre: 1 <= delta <= k <= n - k.
SubspaceCode lift_mrd(uint32_t q, int n, int k, int delta);

// How the right-side companion of parallel/new/comb is realized.
enum class GrmcMode { Filter, Coset };

// Picks the sub-distance a maximizing the pigeonhole coset bound; smallest
// maximizer wins.  Pre: max(1, t1) <= t2 < delta.
int grmc_best_sub_distance(uint32_t q, int m, int n, int delta, int t1, int t2);

// The lift plus rowspace(B | I_k) over a rank-window companion with window
// [0, k - delta].  Filter mode needs k >= 2 delta; otherwise use Coset.
// Pre: n >= 2k > 2 delta > 0.
SubspaceCode parallel_construct(uint32_t q, int n, int k, int delta,
                                GrmcMode mode);

struct MultilevelLevel {
    std::vector<uint8_t> idvec;
    FdrmCode filler;
    std::string label;
};

// General multilevel assembly: checks the identifying vectors have constant
// weight k and pairwise Hamming distance >= d, that each filler matches its
// pattern's diagram and has rank distance >= d / 2, then emits every filled
// pattern.  Pre: total size under the enumeration cap.
SubspaceCode multilevel_construct(FieldPtr gf, int n, int d,
                                  std::vector<MultilevelLevel> levels,
                                  std::string name);

// The distance-2delta family on identifying vectors
// (1^k 0^{n-k}), (1^{k - i delta} 0^delta 1^{(i-1) delta} 1^delta 0^{n-k-delta})
// for i = 1 .. floor(k / delta), with shortened-MRD fillers.
// Pre: n >= 2k + delta, k >= 2 delta.
SubspaceCode mul1_family(uint32_t q, int n, int k, int delta);

// Number of echelon-basis rows that vanish on the last `tail` coordinates
// in every word of an identifying-vector group: rows whose pivot sits left
// of the tail and whose free cells there are zero across the filler basis.
// A group with delta such rows keeps distance 2 delta from every
// rowspace(B | I) word no matter the rank of B.
int group_zero_tail_rows(const std::vector<uint8_t>& idvec,
                         const FdrmCode& filler, int tail);

// Joins a multilevel base with a right-side rank-window lift.  Pre: the
// companion's shape and rank distance match and every base group either
// packs delta + t2 pivots into the first n - k coordinates or has delta
// zero-tail rows.
SubspaceCode comb_construct(const SubspaceCode& base, const GrmcCode& grmc);

// The four-part construction: lift, right-side rank-window lift with window
// [0, k - delta], and two mixed echelon patterns.  Pre: n >= 2k,
// k >= 2 delta.
SubspaceCode new_construct(uint32_t q, int n, int k, int delta);

}  // namespace cdc

#include <doctest.h>

#include <algorithm>
#include <set>

#include "cdc/bounds.hpp"
#include "cdc/constructions.hpp"
#include "cdc/grmc.hpp"
#include "cdc/verify.hpp"

using namespace cdc;

namespace {

uint64_t group_size(const SubspaceCode& code, const std::string& label) {
    for (const auto& g : code.groups)
        if (g.label == label) return g.end - g.begin;
    return 0;
}

bool all_distinct(const SubspaceCode& code) {
    std::set<Subspace> seen(code.words.begin(), code.words.end());
    return seen.size() == code.words.size();
}

}  // namespace

TEST_CASE("lifted code") {
    SubspaceCode code = lift_mrd(2, 8, 4, 2);
    CHECK(code.construction == "lifted");
    CHECK(code.size() == 4096);
    CHECK(code.certified_s == 4);
    REQUIRE(code.groups.size() == 1);
    CHECK(code.groups[0].filler->dim() == 12);
    std::vector<uint8_t> idv{1, 1, 1, 1, 0, 0, 0, 0};
    CHECK(code.groups[0].idvec == idv);
    CHECK(all_distinct(code));
    CHECK(verify_lifted_subset(code, 2).pass);
}

TEST_CASE("parallel with a filtered companion") {
    SubspaceCode code = parallel_construct(2, 8, 4, 2, GrmcMode::Filter);
    CHECK(code.size() == 4622);
    CHECK(group_size(code, "lifted") == 4096);
    CHECK(group_size(code, "companion") == 526);
    CHECK(code.size() == bound_parallel(2, 8, 4, 2).value);
    CHECK(all_distinct(code));
    CHECK(verify_lifted_subset(code, 2).pass);
    auto rep = verify_multilevel_structure(code, 1 << 16);
    CHECK(rep.pass);
}

TEST_CASE("parallel with a coset companion") {
    SubspaceCode code = parallel_construct(2, 10, 4, 3, GrmcMode::Coset);
    CHECK(code.size() == 4097);
    CHECK(group_size(code, "companion") == 1);
    CHECK(code.size() == bound_parallel(2, 10, 4, 3).value);
    auto rep = verify_multilevel_structure(code, 1 << 14);
    CHECK(rep.pass);
}

TEST_CASE("parallel mode preconditions") {
    CHECK_THROWS(parallel_construct(2, 10, 4, 3, GrmcMode::Filter));
    CHECK_THROWS(parallel_construct(2, 8, 4, 2, GrmcMode::Coset));
    CHECK_THROWS(parallel_construct(2, 7, 4, 2, GrmcMode::Filter));
}

TEST_CASE("shifted pivot family") {
    SubspaceCode code = mul1_family(2, 10, 4, 2);
    CHECK(code.size() == 282624);
    CHECK(code.certified_s == 4);
    REQUIRE(code.groups.size() == 3);
    CHECK(group_size(code, "level-0") == 262144);
    CHECK(group_size(code, "level-1") == 16384);
    CHECK(group_size(code, "level-2") == 4096);
    CHECK(code.groups[0].filler->dim() == 18);
    CHECK(code.groups[1].filler->dim() == 14);
    CHECK(code.groups[2].filler->dim() == 12);
}

TEST_CASE("joining the family with a companion") {
    SubspaceCode base = mul1_family(2, 10, 4, 2);
    GrmcCode grmc = grmc_filter_construct(2, 4, 6, 2, 0, 2);
    SubspaceCode code = comb_construct(base, grmc);
    CHECK(code.construction == "comb-mul1");
    CHECK(code.size() == 284830);
    CHECK(group_size(code, "companion") == 2206);
    CHECK(code.size() == bound_new3(2, 10, 4, 2).value);

    // A ceiling the base's pivot weight cannot absorb is refused: every
    // group here keeps k pivots on the left, allowing at most k - delta.
    GrmcCode wide = grmc_filter_construct(2, 4, 6, 2, 0, 3);
    CHECK_THROWS(comb_construct(base, wide));

    // Companions stack only once.
    CHECK_THROWS(comb_construct(code, grmc));
}

TEST_CASE("four part construction") {
    SubspaceCode code = new_construct(2, 8, 4, 2);
    CHECK(code.construction == "new");
    CHECK(code.size() == 4642);
    CHECK(code.size() == bound_construction_new(2, 8, 4, 2).value);
    CHECK(group_size(code, "lifted") == 4096);
    CHECK(group_size(code, "mixed-1") == 16);
    CHECK(group_size(code, "mixed-2") == 4);
    CHECK(group_size(code, "companion") == 526);
    CHECK(all_distinct(code));
    CHECK(code.certified_s == 2);  // the mixed patterns keep k - delta left pivots
    CHECK(verify_lifted_subset(code, 2).pass);
    auto rep = verify_multilevel_structure(code, 1 << 16);
    CHECK(rep.pass);
}

TEST_CASE("four part construction beyond the corner point") {
    SubspaceCode code = new_construct(2, 10, 4, 2);
    CHECK(code.size() == bound_construction_new(2, 10, 4, 2).value);
    auto rep = verify_multilevel_structure(code, 1 << 15);
    CHECK(rep.pass);
}

TEST_CASE("four part construction over GF(3)") {
    SubspaceCode code = new_construct(3, 8, 4, 2);
    CHECK(code.size() == bound_construction_new(3, 8, 4, 2).value);
    auto rep = verify_multilevel_structure(code, 1 << 14);
    CHECK(rep.pass);
}

TEST_CASE("zero tail rows") {
    // The two mixed groups of the four part construction keep delta rows
    // clear of the last k coordinates, which is what admits the full
    // [0, k - delta] companion window; the plain lift does not.
    SubspaceCode code = new_construct(2, 8, 4, 2);
    for (const auto& g : code.groups) {
        if (g.idvec.empty()) continue;
        int z = group_zero_tail_rows(g.idvec, *g.filler, code.k);
        if (g.label == "lifted")
            CHECK(z == 0);
        else
            CHECK(z >= code.d / 2);
    }
}

TEST_CASE("multilevel assembly preconditions") {
    FieldPtr gf = make_field(2);
    auto ef = echelon_ferrers_form({1, 1, 0, 0, 0, 0});
    FdrmCode filler = fdrmc_shortening(*gf, *ef.diagram, 1);

    // Identifying vectors of unequal weight are rejected.
    std::vector<MultilevelLevel> bad;
    bad.push_back({{1, 1, 0, 0, 0, 0}, filler, "a"});
    bad.push_back({{1, 1, 1, 0, 0, 0},
                   fdrmc_shortening(
                       *gf, *echelon_ferrers_form({1, 1, 1, 0, 0, 0}).diagram, 1),
                   "b"});
    CHECK_THROWS(multilevel_construct(gf, 6, 2, bad, "x"));

    // Identifying vectors too close together are rejected.  Both fillers
    // meet the rank floor for d = 4, so the Hamming gap is what trips.
    std::vector<MultilevelLevel> close;
    close.push_back({{1, 1, 0, 0, 0, 0},
                     fdrmc_shortening(*gf, *ef.diagram, 2), "a"});
    close.push_back({{1, 0, 1, 0, 0, 0},
                     fdrmc_shortening(
                         *gf, *echelon_ferrers_form({1, 0, 1, 0, 0, 0}).diagram, 2),
                     "b"});
    CHECK_THROWS(multilevel_construct(gf, 6, 4, close, "x"));

    // Filler whose diagram does not match the pattern is rejected.
    std::vector<MultilevelLevel> off;
    off.push_back({{1, 1, 0, 0, 0, 0},
                   fdrmc_shortening(*gf, FerrersDiagram({1, 2, 2, 2}), 1), "a"});
    CHECK_THROWS(multilevel_construct(gf, 6, 2, off, "x"));
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS(lift_mrd(2, 6, 4, 2));      // k > n - k
    CHECK_THROWS(new_construct(2, 7, 4, 2)); // n < 2k
    CHECK_THROWS(new_construct(2, 8, 4, 3)); // k < 2 delta
    CHECK_THROWS(mul1_family(2, 10, 4, 3));  // n < 2k + delta fails via k
}

#include "cdc/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cdc/bounds.hpp"
#include "cdc/gabidulin.hpp"
#include "cdc/gaussian.hpp"

namespace cdc {

FieldPtr make_field(uint32_t q) { return std::make_shared<const GF>(q); }

namespace {

std::vector<uint8_t> run_vector(
    std::initializer_list<std::pair<int, int>> runs) {
    std::vector<uint8_t> v;
    for (auto [bit, len] : runs) v.insert(v.end(), (size_t)len, (uint8_t)bit);
    return v;
}

int weight_prefix(const std::vector<uint8_t>& v, int len) {
    int w = 0;
    for (int i = 0; i < len; ++i) w += v[(size_t)i];
    return w;
}

// Appends rowspace(B | I_k) for every companion B.  A base word U keeps
// distance d from every companion in one of two ways: with s pivots in the
// first n - k coordinates, stacking gives rank >= k + s - rank(B), so
// s >= t2 + d/2 suffices; alternatively, d/2 echelon rows of U that vanish
// on the last k coordinates stay independent of the companion outright.
SubspaceCode join_companion(SubspaceCode base, const GrmcCode& grmc,
                            std::string name) {
    int k = base.k, right = base.n - base.k;
    if (grmc.params.m != k || grmc.params.n != right)
        throw std::invalid_argument("companion join: shape mismatch");
    if (2 * grmc.params.delta < base.d)
        throw std::invalid_argument("companion join: rank distance too small");
    for (const auto& g : base.groups) {
        if (g.idvec.empty())
            throw std::invalid_argument(
                "companion join: base already holds a companion");
        if (weight_prefix(g.idvec, right) - base.d / 2 >= grmc.params.t2)
            continue;
        if (g.filler &&
            group_zero_tail_rows(g.idvec, *g.filler, k) >= base.d / 2)
            continue;
        throw std::invalid_argument("companion join: group '" + g.label +
                                    "' cannot absorb the rank ceiling");
    }

    Mat id = Mat::identity(*base.field, k);
    size_t begin = base.words.size();
    for (const Mat& b : grmc.words)
        base.words.push_back(
            Subspace::from_span(Mat::hstack(b.rebased(*base.field), id)));
    SubspaceCode::Group g;
    g.label = "companion";
    g.begin = begin;
    g.end = base.words.size();
    g.t1 = grmc.params.t1;
    g.t2 = grmc.params.t2;
    g.rank_distance = grmc.params.delta;
    base.groups.push_back(std::move(g));
    base.construction = std::move(name);
    return base;
}

}  // namespace

SubspaceCode multilevel_construct(FieldPtr gf, int n, int d,
                                  std::vector<MultilevelLevel> levels,
                                  std::string name) {
    if (!gf) throw std::invalid_argument("multilevel_construct: null field");
    if (levels.empty())
        throw std::invalid_argument("multilevel_construct: no levels");
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("multilevel_construct: bad distance");

    int k = -1;
    uint64_t total = 0;
    for (const auto& l : levels) {
        if ((int)l.idvec.size() != n)
            throw std::invalid_argument(
                "multilevel_construct: identifying vector length");
        int wt = 0;
        for (uint8_t b : l.idvec) {
            if (b > 1)
                throw std::invalid_argument(
                    "multilevel_construct: identifying vector entries");
            wt += b;
        }
        if (k < 0) k = wt;
        if (wt != k)
            throw std::invalid_argument(
                "multilevel_construct: identifying vectors of mixed weight");
        auto ef = echelon_ferrers_form(l.idvec);
        if (!ef.diagram || !(*ef.diagram == l.filler.diagram))
            throw std::invalid_argument(
                "multilevel_construct: filler diagram does not match pattern");
        if (2 * l.filler.delta < d)
            throw std::invalid_argument(
                "multilevel_construct: filler rank distance too small");
        if (!l.filler.basis.empty() &&
            l.filler.basis.front().field().q() != gf->q())
            throw std::invalid_argument(
                "multilevel_construct: filler field mismatch");
        total += l.filler.size();
        if (total > kEnumCap)
            throw std::range_error(
                "multilevel_construct: size exceeds the enumeration cap");
    }
    for (size_t a = 0; a < levels.size(); ++a)
        for (size_t b = a + 1; b < levels.size(); ++b) {
            int dh = 0;
            for (int i = 0; i < n; ++i)
                dh += levels[a].idvec[(size_t)i] != levels[b].idvec[(size_t)i];
            if (dh < d)
                throw std::invalid_argument(
                    "multilevel_construct: identifying vectors too close");
        }

    SubspaceCode code;
    code.q = gf->q();
    code.n = n;
    code.k = k;
    code.d = d;
    code.construction = std::move(name);
    code.field = std::move(gf);
    code.words.reserve((size_t)total);
    for (auto& l : levels) {
        auto ef = echelon_ferrers_form(l.idvec);
        auto filler = std::make_shared<const FdrmCode>(std::move(l.filler));
        SubspaceCode::Group g;
        g.label = std::move(l.label);
        g.idvec = std::move(l.idvec);
        g.begin = code.words.size();
        uint64_t sz = filler->size();
        for (uint64_t idx = 0; idx < sz; ++idx)
            code.words.push_back(
                fill_pattern(*code.field, ef, filler->word(idx)));
        g.end = code.words.size();
        g.rank_distance = filler->delta;
        g.filler = std::move(filler);
        int s = weight_prefix(g.idvec, n - k);
        if (code.certified_s < 0 || s < code.certified_s)
            code.certified_s = s;
        code.groups.push_back(std::move(g));
    }
    return code;
}

SubspaceCode lift_mrd(uint32_t q, int n, int k, int delta) {
    if (!(1 <= delta && delta <= k && k <= n - k))
        throw std::invalid_argument("lift_mrd: need 1 <= delta <= k <= n - k");
    FieldPtr field = make_field(q);
    FdrmCode filler = fdrmc_shortening(
        *field, FerrersDiagram(std::vector<int>((size_t)(n - k), k)), delta);
    std::vector<MultilevelLevel> levels;
    levels.push_back(
        {run_vector({{1, k}, {0, n - k}}), std::move(filler), "lifted"});
    return multilevel_construct(std::move(field), n, 2 * delta,
                                std::move(levels), "lifted");
}

int grmc_best_sub_distance(uint32_t q, int m, int n, int delta, int t1,
                           int t2) {
    if (m < n) std::swap(m, n);
    t2 = std::min(t2, n);
    int lo = std::max(1, t1);
    if (!(lo <= t2 && t2 < delta && delta <= n))
        throw std::invalid_argument("grmc_best_sub_distance: bad window");
    int best_a = lo;
    mpz_class best = -1;
    for (int a = lo; a < delta; ++a) {
        auto dist = rank_distribution(q, m, n, a);
        mpz_class num = 0;
        for (int i = lo; i <= t2; ++i) {
            auto it = dist.find(i);
            if (it != dist.end()) num += it->second;
        }
        mpz_class denom = zpow(q, (uint64_t)m * (uint64_t)(delta - a)) - 1;
        mpz_class val;
        mpz_cdiv_q(val.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
        if (val > best) {
            best = val;
            best_a = a;
        }
    }
    return best_a;
}

SubspaceCode parallel_construct(uint32_t q, int n, int k, int delta,
                                GrmcMode mode) {
    if (!(delta >= 1 && k > delta && n >= 2 * k))
        throw std::invalid_argument(
            "parallel_construct: need n >= 2k > 2 delta > 0");
    SubspaceCode base = lift_mrd(q, n, k, delta);
    GrmcCode grmc;
    if (mode == GrmcMode::Filter) {
        if (k < 2 * delta)
            throw std::invalid_argument(
                "parallel_construct: filter mode needs k >= 2 delta");
        grmc = grmc_filter_construct(q, k, n - k, delta, 0, k - delta);
    } else {
        if (k >= 2 * delta)
            throw std::invalid_argument(
                "parallel_construct: coset mode needs k < 2 delta");
        int a = grmc_best_sub_distance(q, k, n - k, delta, 0, k - delta);
        grmc = grmc_coset_construct(q, k, n - k, delta, 0, k - delta, a);
    }
    return join_companion(std::move(base), grmc, "parallel");
}

SubspaceCode mul1_family(uint32_t q, int n, int k, int delta) {
    if (!(delta >= 1 && k >= 2 * delta && n >= 2 * k + delta))
        throw std::invalid_argument(
            "mul1_family: need n >= 2k + delta, k >= 2 delta");
    FieldPtr field = make_field(q);
    int imax = k / delta;
    std::vector<MultilevelLevel> levels;
    for (int i = 0; i <= imax; ++i) {
        std::vector<uint8_t> v =
            i == 0 ? run_vector({{1, k}, {0, n - k}})
                   : run_vector({{1, k - i * delta},
                                 {0, delta},
                                 {1, (i - 1) * delta},
                                 {1, delta},
                                 {0, n - k - delta}});
        auto ef = echelon_ferrers_form(v);
        FdrmCode filler = fdrmc_shortening(*field, *ef.diagram, delta);
        levels.push_back(
            {std::move(v), std::move(filler), "level-" + std::to_string(i)});
    }
    return multilevel_construct(std::move(field), n, 2 * delta,
                                std::move(levels), "mul1");
}

int group_zero_tail_rows(const std::vector<uint8_t>& idvec,
                         const FdrmCode& filler, int tail) {
    auto ef = echelon_ferrers_form(idvec);
    int split = (int)idvec.size() - tail;
    std::vector<int> abscol;  // diagram column -> coordinate
    for (size_t j = 0; j < ef.free_cols.size(); ++j)
        if (ef.heights[j] > 0) abscol.push_back(ef.free_cols[j]);
    int count = 0;
    for (int r = 0; r < (int)ef.pivots.size(); ++r) {
        if (ef.pivots[(size_t)r] >= split) continue;
        bool zero = true;
        for (int c = 0; c < (int)abscol.size() && zero; ++c) {
            if (abscol[(size_t)c] < split) continue;
            if (!filler.diagram.has_dot(r, c)) continue;
            for (const Mat& b : filler.basis)
                if (b.at(r, c) != 0) {
                    zero = false;
                    break;
                }
        }
        if (zero) ++count;
    }
    return count;
}

SubspaceCode comb_construct(const SubspaceCode& base, const GrmcCode& grmc) {
    return join_companion(base, grmc, "comb-" + base.construction);
}

SubspaceCode new_construct(uint32_t q, int n, int k, int delta) {
    if (!(delta >= 1 && k >= 2 * delta && n >= 2 * k))
        throw std::invalid_argument("new_construct: need n >= 2k, k >= 2 delta");
    FieldPtr field = make_field(q);
    const GF& gf = *field;
    int w = n - k - delta;  // free width of the two mixed patterns

    std::vector<MultilevelLevel> levels;
    levels.push_back(
        {run_vector({{1, k}, {0, n - k}}),
         fdrmc_shortening(
             gf, FerrersDiagram(std::vector<int>((size_t)(n - k), k)), delta),
         "lifted"});

    // Mixed pattern 1 on pivots 1^{k-d} 0^d 1^d: the filler diagram has
    // delta short columns of height k - delta and w full columns.  Two ways
    // to fill it; take whichever dimension, l1 or l2, is larger.
    {
        auto [l1, l2] = l1_l2(n, k, delta);
        FdrmCode f3 = [&]() -> FdrmCode {
            if (l1 >= l2) {
                // One shortened code re-laid block diagonally.
                std::vector<int> h;
                h.insert(h.end(), (size_t)delta, k - delta);
                h.insert(h.end(), (size_t)delta, w);
                FdrmCode c12 = fdrmc_shortening(gf, FerrersDiagram(h), delta);
                return fdrmc_block_diag(c12, delta);
            }
            // Two full-rectangle codes with split distances j and delta - j,
            // paired coefficient-wise.
            long best = -1;
            int bj = 1;
            for (int j = 1; j < delta; ++j) {
                long v = std::min((long)(delta - j + 1) * (k - delta),
                                  (long)(j + 1) * w);
                if (v > best) {
                    best = v;
                    bj = j;
                }
            }
            FdrmCode c1 = fdrmc_shortening(
                gf, FerrersDiagram(std::vector<int>((size_t)delta, k - delta)),
                bj);
            FdrmCode c2 = fdrmc_shortening(
                gf, FerrersDiagram(std::vector<int>((size_t)w, delta)),
                delta - bj);
            return fdrmc_block_sum(c1, c2);
        }();
        if (f3.dim() != (int)std::max(l1, l2))
            throw std::logic_error("new_construct: mixed-1 filler dimension");
        levels.push_back(
            {run_vector({{1, k - delta}, {0, delta}, {1, delta}, {0, w}}),
             std::move(f3), "mixed-1"});
    }

    // Mixed pattern 2 on pivots 1^{k-2d} 0^d 1^{2d}: fillers are the words
    // of MRD[(k - delta) x w, delta] with delta zero rows spliced into the
    // middle, so the leading delta diagram columns (absent when k = 2 delta)
    // stay zero and every nonzero word keeps rank >= delta.
    {
        int dp = k > 2 * delta ? delta : 0;
        std::vector<int> h;
        h.insert(h.end(), (size_t)dp, k - 2 * delta);
        h.insert(h.end(), (size_t)w, k);
        FerrersDiagram diag(h);
        MrdCode inner(q, k - delta, w, delta);
        std::vector<Mat> raw;
        for (const Mat& mw : inner.span_basis()) {
            Mat e(gf, k, dp + w);
            for (int c = 0; c < w; ++c) {
                for (int r = 0; r < k - 2 * delta; ++r)
                    e.at(r, dp + c) = mw.at(r, c);
                for (int r = 0; r < delta; ++r)
                    e.at(k - delta + r, dp + c) = mw.at(k - 2 * delta + r, c);
            }
            raw.push_back(std::move(e));
        }
        FdrmCode f4{diag, delta, false, echelonize_on_diagram(gf, diag, raw)};
        f4.suboptimal = f4.dim() < dimension_upper_bound(diag, delta);
        if (f4.dim() != w * (k - 2 * delta + 1))
            throw std::logic_error("new_construct: mixed-2 filler dimension");
        levels.push_back(
            {run_vector({{1, k - 2 * delta}, {0, delta}, {1, 2 * delta}, {0, w}}),
             std::move(f4), "mixed-2"});
    }

    SubspaceCode code = multilevel_construct(field, n, 2 * delta,
                                             std::move(levels), "new");
    GrmcCode grmc = grmc_filter_construct(q, k, n - k, delta, 0, k - delta);
    return join_companion(std::move(code), grmc, "new");
}

}  // namespace cdc

#include "cdc/grmc.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdc/gaussian.hpp"
#include "cdc/prng.hpp"

namespace cdc {

mpz_class grmc_lower_bound(uint32_t q, int m, int n, int delta, int t1,
                           int t2) {
    if (m < n) std::swap(m, n);
    t2 = std::min(t2, n);
    if (delta < 1 || delta > n)
        throw std::invalid_argument("grmc_lower_bound: need 1 <= delta <= min(m,n)");

    if (t2 >= delta) {
        auto dist = rank_distribution(q, m, n, delta);
        mpz_class total = 0;
        for (int r = std::max(t1, 0); r <= t2; ++r) {
            auto it = dist.find(r);
            if (it != dist.end()) total += it->second;
        }
        return total;
    }

    // t2 < delta: pigeonhole over the q^{m(delta-a)} - 1 nonzero cosets of
    // G[m x n, delta] inside G[m x n, a].  A single fixed matrix of any
    // admissible rank always qualifies, hence the floor at 1.
    mpz_class best = t1 <= t2 ? 1 : 0;
    int lo = std::max(1, t1);
    for (int a = lo; a < delta && a <= t2; ++a) {
        auto dist = rank_distribution(q, m, n, a);
        mpz_class total = 0;
        for (int r = lo; r <= t2; ++r) {
            auto it = dist.find(r);
            if (it != dist.end()) total += it->second;
        }
        mpz_class cosets = zpow(q, (uint64_t)m * (delta - a)) - 1;
        mpz_class bound;
        mpz_cdiv_q(bound.get_mpz_t(), total.get_mpz_t(), cosets.get_mpz_t());
        best = std::max(best, bound);
    }
    return best;
}

namespace {

// Rank of the m x n expansion of a word over GF(q^m) without materializing
// the matrix: rank is invariant under transposition, so eliminate directly
// on the packed digit rows.  Fast path for q = 2 where a packed element is
// its own bit row.
int word_rank(const ExtField& f, const std::vector<ExtField::Elem>& w) {
    if (f.base().q() == 2) {
        uint64_t rows[64];
        int cnt = 0;
        for (ExtField::Elem e : w)
            if (e) rows[cnt++] = e;
        int rank = 0;
        for (int i = 0; i < cnt; ++i) {
            uint64_t v = rows[i];
            for (int j = 0; j < rank; ++j)
                v = std::min(v, v ^ rows[j]);
            if (v) rows[rank++] = v;
        }
        return rank;
    }
    const GF& gf = f.base();
    int n = (int)w.size(), m = (int)f.m();
    Mat a(gf, n, m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) a.at(r, c) = f.digit(w[(size_t)r], (uint32_t)c);
    return a.rref_in_place();
}

struct FieldTower {
    GF base;
    ExtField ext;
    FieldTower(uint32_t q, uint32_t m) : base(q), ext(base, m) {}
    FieldTower(const FieldTower&) = delete;
};

}  // namespace

GrmcCode grmc_filter_construct(uint32_t q, int m, int n, int delta, int t1,
                               int t2) {
    if (t2 < delta)
        throw std::invalid_argument("grmc_filter_construct: needs t2 >= delta");
    t2 = std::min(t2, std::min(m, n));
    MrdCode mrd(q, m, n, delta);
    if (!mrd.enumerable())
        throw std::range_error("grmc_filter_construct: code too large");

    auto shared = std::make_shared<MrdCode>(std::move(mrd));
    GrmcCode out;
    out.params = {q, m, n, delta, t1, t2};
    out.method = "filter";
    out.fields = shared;
    uint64_t total = shared->size_u64();
    for (uint64_t idx = 0; idx < total; ++idx) {
        Mat w = shared->word(idx);
        int r = w.rank();
        if (r >= t1 && r <= t2) out.words.push_back(std::move(w));
    }
    return out;
}

GrmcCode grmc_coset_construct(uint32_t q, int m, int n, int delta, int t1,
                              int t2, int a, uint64_t seed) {
    bool transposed = m < n;
    if (transposed) std::swap(m, n);
    t1 = std::max(1, t1);
    if (!(t1 <= t2 && t2 < delta && 1 <= a && a <= t2 && delta <= n))
        throw std::invalid_argument("grmc_coset_construct: bad parameters");

    auto tower = std::make_shared<FieldTower>(q, (uint32_t)m);
    const ExtField& f = tower->ext;
    // Generator rows of G[m x n, a]; the first n - delta + 1 generate
    // D1 = G[m x n, delta], the remaining delta - a rows generate D2.
    GabidulinCode big = make_gabidulin(f, n, a);
    int k1 = n - delta + 1;
    int k2 = delta - a;

    uint64_t Q = f.size();
    mpz_class inner_z = zpow(q, (uint64_t)m * k1);
    if (inner_z > kEnumCap)
        throw std::range_error("grmc_coset_construct: coset too large");
    uint64_t inner = mpz_get_ui(inner_z.get_mpz_t());
    mpz_class cosets_z = zpow(q, (uint64_t)m * k2) - 1;

    constexpr uint64_t kCosetExhaustiveCap = uint64_t(1) << 16;
    constexpr uint64_t kCosetSampleCount = uint64_t(1) << 12;

    GrmcCode out;
    out.params = {q, transposed ? n : m, transposed ? m : n, delta, t1, t2};
    out.method = "coset";
    out.fields = tower;

    bool sampled = cosets_z > kCosetExhaustiveCap;
    out.sampled = sampled;
    out.seed = sampled ? seed : 0;
    uint64_t coset_cap =
        sampled ? kCosetSampleCount : mpz_get_ui(cosets_z.get_mpz_t());
    Mcg64 rng(seed);
    uint64_t sample_range = mpz_class(cosets_z) > (uint64_t(1) << 62)
                                ? (uint64_t(1) << 62)
                                : mpz_get_ui(cosets_z.get_mpz_t());

    std::vector<ExtField::Elem> offset(n), word(n), msg1(k1);
    std::vector<uint64_t> best;  // accepted d1-message indices
    uint64_t best_coset = 0;
    bool have_best = false;

    for (uint64_t step = 0; step < coset_cap; ++step) {
        uint64_t v = sampled ? 1 + rng.below(sample_range) : step + 1;
        // D2 offset for message v, digits base q^m, first extra row most
        // significant.
        std::fill(offset.begin(), offset.end(), 0);
        uint64_t t = v;
        for (int row = k2; row-- > 0;) {
            ExtField::Elem c = t % Q;
            t /= Q;
            if (c == 0) continue;
            const auto& gen = big.gen[(size_t)(k1 + row)];
            for (int j = 0; j < n; ++j)
                offset[(size_t)j] = f.add(offset[(size_t)j], f.mul(c, gen[(size_t)j]));
        }

        std::vector<uint64_t> accepted;
        for (uint64_t u = 0; u < inner; ++u) {
            uint64_t tu = u;
            for (int row = k1; row-- > 0;) {
                msg1[(size_t)row] = tu % Q;
                tu /= Q;
            }
            word = offset;
            for (int row = 0; row < k1; ++row) {
                if (msg1[(size_t)row] == 0) continue;
                const auto& gen = big.gen[(size_t)row];
                for (int j = 0; j < n; ++j)
                    word[(size_t)j] =
                        f.add(word[(size_t)j], f.mul(msg1[(size_t)row], gen[(size_t)j]));
            }
            int r = word_rank(f, word);
            if (r >= t1 && r <= t2) accepted.push_back(u);
        }
        if (!have_best || accepted.size() > best.size() ||
            (accepted.size() == best.size() && v < best_coset)) {
            best = std::move(accepted);
            best_coset = v;
            have_best = true;
        }
    }

    out.coset_index = best_coset;
    // Materialize the winning coset's words in message order.
    uint64_t t = best_coset;
    std::fill(offset.begin(), offset.end(), 0);
    for (int row = k2; row-- > 0;) {
        ExtField::Elem c = t % Q;
        t /= Q;
        if (c == 0) continue;
        const auto& gen = big.gen[(size_t)(k1 + row)];
        for (int j = 0; j < n; ++j)
            offset[(size_t)j] = f.add(offset[(size_t)j], f.mul(c, gen[(size_t)j]));
    }
    for (uint64_t u : best) {
        uint64_t tu = u;
        for (int row = k1; row-- > 0;) {
            msg1[(size_t)row] = tu % Q;
            tu /= Q;
        }
        word = offset;
        for (int row = 0; row < k1; ++row) {
            if (msg1[(size_t)row] == 0) continue;
            const auto& gen = big.gen[(size_t)row];
            for (int j = 0; j < n; ++j)
                word[(size_t)j] =
                    f.add(word[(size_t)j], f.mul(msg1[(size_t)row], gen[(size_t)j]));
        }
        Mat w = expand_to_matrix(f, word);
        out.words.push_back(transposed ? w.transposed() : w);
    }
    return out;
}

GrmcVerifyReport grmc_verify(const GrmcCode& code) {
    const GrmcParams& p = code.params;
    GrmcVerifyReport rep;
    rep.words = code.words.size();
    rep.ranks_ok = true;
    for (const Mat& w : code.words) {
        int r = w.rank();
        if (r < p.t1 || r > p.t2) {
            rep.ranks_ok = false;
            break;
        }
    }
    rep.distance_ok = true;
    const GF* gf = code.words.empty() ? nullptr : &code.words[0].field();
    for (size_t i = 0; i < code.words.size() && rep.distance_ok; ++i) {
        for (size_t j = i + 1; j < code.words.size(); ++j) {
            Mat d(*gf, p.m, p.n);
            for (int r = 0; r < p.m; ++r)
                for (int c = 0; c < p.n; ++c)
                    d.at(r, c) =
                        gf->sub(code.words[i].at(r, c), code.words[j].at(r, c));
            int rank = d.rref_in_place();
            ++rep.pairs_checked;
            if (rep.min_pair_rank < 0 || rank < rep.min_pair_rank)
                rep.min_pair_rank = rank;
            if (rank < p.delta) {
                rep.distance_ok = false;
                break;
            }
        }
    }
    return rep;
}

GrmcParams grmc_upper_bound_reduce(const GrmcParams& p, int i, int j) {
    int cap = std::min(p.delta - 1, p.t1);
    if (i < 0 || j < 0 || i > cap || j > cap)
        throw std::invalid_argument("grmc_upper_bound_reduce: bad i, j");
    int l = std::max(i, j);
    GrmcParams r;
    r.q = p.q;
    r.m = p.m - i;
    r.n = p.n - j;
    r.delta = p.delta - l;
    r.t1 = p.t1 - l;
    r.t2 = std::min({p.m - i, p.n - j, p.t2});
    return r;
}

}  // namespace cdc

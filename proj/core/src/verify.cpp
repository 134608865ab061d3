#include "cdc/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "cdc/bounds.hpp"
#include "cdc/gaussian.hpp"
#include "cdc/prng.hpp"

namespace cdc {

namespace {

void atomic_min(std::atomic<uint64_t>& a, uint64_t v) {
    uint64_t cur = a.load(std::memory_order_relaxed);
    while (v < cur && !a.compare_exchange_weak(cur, v)) {
    }
}

// Pairs (i, j), i < j, numbered lexicographically; row i starts at
// i(N-1) - i(i-1)/2.
uint64_t row_start(uint64_t i, uint64_t n) {
    return i * (n - 1) - i * (i - 1) / 2;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (int)hw;
}

}  // namespace

VerifyReport verify_cdc(const std::vector<Subspace>& words, int d,
                        uint64_t samples, uint64_t seed, int threads) {
    VerifyReport rep;
    rep.required_distance = d;
    rep.mode = samples ? "sampled" : "exhaustive";
    rep.threads = resolve_threads(threads);
    auto t0 = std::chrono::steady_clock::now();
    uint64_t n = words.size();

    if (n < 2) {
        rep.pass = true;
        rep.notes.push_back("fewer than two words; nothing to compare");
        rep.seconds = 0.0;
        return rep;
    }

    if (samples == 0) {
        std::atomic<uint64_t> best{UINT64_MAX};
        std::atomic<uint64_t> checked{0};
        int nw = (int)std::min<uint64_t>((uint64_t)rep.threads, n);
        auto worker = [&](int w) {
            uint64_t local = 0;
            for (uint64_t i = (uint64_t)w; i + 1 < n; i += (uint64_t)nw) {
                uint64_t base = row_start(i, n);
                if (base >= best.load(std::memory_order_relaxed)) continue;
                for (uint64_t j = i + 1; j < n; ++j) {
                    uint64_t idx = base + (j - i - 1);
                    if (idx >= best.load(std::memory_order_relaxed)) break;
                    ++local;
                    if (!subspace_distance_at_least(words[i], words[j], d)) {
                        atomic_min(best, idx);
                        break;
                    }
                }
            }
            checked += local;
        };
        if (nw == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < nw; ++w) pool.emplace_back(worker, w);
            for (auto& t : pool) t.join();
        }
        rep.pairs_checked = checked.load();
        uint64_t idx = best.load();
        if (idx == UINT64_MAX) {
            rep.pass = true;
        } else {
            uint64_t i = 0;
            while (row_start(i + 1, n) <= idx) ++i;
            uint64_t j = i + 1 + (idx - row_start(i, n));
            rep.counterexample = {i, j};
            rep.counterexample_distance = subspace_distance(words[i], words[j]);
            rep.pass = false;
        }
    } else {
        rep.samples_requested = samples;
        rep.seed = seed;
        Mcg64 rng(seed);
        rep.pass = true;
        for (uint64_t s = 0; s < samples; ++s) {
            uint64_t i = rng.below(n);
            uint64_t j = rng.below(n - 1);
            if (j >= i) ++j;
            ++rep.pairs_checked;
            if (!subspace_distance_at_least(words[i], words[j], d)) {
                rep.counterexample = {std::min(i, j), std::max(i, j)};
                rep.counterexample_distance =
                    subspace_distance(words[i], words[j]);
                rep.pass = false;
                break;
            }
        }
    }

    // Independent re-measurement through the intersection basis on a seeded
    // slice of pairs; the two formulas must agree exactly.
    {
        Mcg64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        uint64_t m = std::min<uint64_t>(1000, row_start(n - 1, n) + 1);
        for (uint64_t s = 0; s < m; ++s) {
            uint64_t i = rng.below(n);
            uint64_t j = rng.below(n - 1);
            if (j >= i) ++j;
            int d1 = subspace_distance(words[i], words[j]);
            int d2 = subspace_distance_via_intersection(words[i], words[j]);
            ++rep.cross_checked_pairs;
            if (d1 != d2) {
                rep.pass = false;
                rep.notes.push_back(
                    "distance formulas disagree on pair (" + std::to_string(i) +
                    ", " + std::to_string(j) + "): " + std::to_string(d1) +
                    " vs " + std::to_string(d2));
                break;
            }
        }
    }

    rep.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

StructureReport verify_lifted_subset(const SubspaceCode& code, int delta) {
    StructureReport rep;
    int n = code.n, k = code.k;
    std::vector<Mat> companions;
    for (const Subspace& w : code.words) {
        const auto& piv = w.pivots();
        bool leading = (int)piv.size() == k;
        for (int i = 0; leading && i < k; ++i) leading = piv[(size_t)i] == i;
        if (leading) companions.push_back(w.pivot_free_submatrix());
    }

    mpz_class expected = lifted_size(code.q, n, k, delta);
    if (mpz_class((unsigned long)companions.size()) == expected)
        rep.ok("lifted block count " + std::to_string(companions.size()));
    else
        rep.fail("lifted block count " + std::to_string(companions.size()) +
                 " != " + expected.get_str());
    if (companions.empty()) return rep;

    const GF& gf = companions[0].field();
    int cols = k * (n - k);
    // Incremental echelon basis of the flattened companions.
    std::vector<std::vector<uint32_t>> basis;
    std::vector<int> lead;
    uint64_t zero_count = 0;
    int min_rank = -1;
    for (const Mat& a : companions) {
        int r = a.rank();
        if (r == 0)
            ++zero_count;
        else if (min_rank < 0 || r < min_rank)
            min_rank = r;
        std::vector<uint32_t> v(a.data());
        for (size_t b = 0; b < basis.size(); ++b) {
            uint32_t f = v[(size_t)lead[b]];
            if (f == 0) continue;
            uint32_t s = gf.div(f, basis[b][(size_t)lead[b]]);
            for (int c = 0; c < cols; ++c)
                v[(size_t)c] = gf.sub(v[(size_t)c], gf.mul(s, basis[b][(size_t)c]));
        }
        int l = -1;
        for (int c = 0; c < cols; ++c)
            if (v[(size_t)c] != 0) {
                l = c;
                break;
            }
        if (l >= 0) {
            basis.push_back(std::move(v));
            lead.push_back(l);
        }
    }
    mpz_class span_size = zpow(code.q, basis.size());
    if (span_size == mpz_class((unsigned long)companions.size()))
        rep.ok("companion set is linear, dimension " +
               std::to_string(basis.size()));
    else
        rep.fail("companion set not linear: q^" +
                 std::to_string(basis.size()) + " != " +
                 std::to_string(companions.size()));
    if (zero_count == 1)
        rep.ok("zero companion present once");
    else
        rep.fail("zero companion count " + std::to_string(zero_count));
    if (min_rank >= delta)
        rep.ok("min nonzero companion rank " + std::to_string(min_rank) +
               " >= " + std::to_string(delta));
    else
        rep.fail("min nonzero companion rank " + std::to_string(min_rank) +
                 " < " + std::to_string(delta));
    return rep;
}

namespace {

// Companion matrix B of a word known to be rowspace(B | I_k): solve
// R2 B = R1 where the echelon basis splits as [R1 | R2].
bool extract_right_companion(const Subspace& w, int split, Mat& out) {
    const GF& gf = w.basis().field();
    int k = w.dim();
    int right = w.ambient() - split;
    if (right != k) return false;
    Mat sys(gf, k, k + split);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) sys.at(r, c) = w.basis().at(r, split + c);
        for (int c = 0; c < split; ++c) sys.at(r, k + c) = w.basis().at(r, c);
    }
    std::vector<int> piv;
    int rank = sys.rref_in_place(&piv);
    if (rank != k) return false;
    for (int i = 0; i < k; ++i)
        if (piv[(size_t)i] != i) return false;
    out = Mat(gf, k, split);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < split; ++c) out.at(r, c) = sys.at(r, k + c);
    return true;
}

int diff_rank(const Mat& a, const Mat& b) {
    const GF& gf = a.field();
    Mat d(gf, a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            d.at(r, c) = gf.sub(a.at(r, c), b.at(r, c));
    return d.rref_in_place();
}

int hamming(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

StructureReport verify_multilevel_structure(const SubspaceCode& code,
                                            uint64_t cross_samples,
                                            uint64_t seed) {
    StructureReport rep;
    int delta = code.d / 2;
    constexpr uint64_t kPairwiseCap = uint64_t(1) << 14;
    constexpr uint64_t kFillerEnumCap = uint64_t(1) << 20;

    if (code.groups.empty()) {
        rep.fail("code carries no group metadata");
        return rep;
    }
    size_t covered = 0;
    for (const auto& g : code.groups) {
        if (g.begin != covered || g.end < g.begin) {
            rep.fail("group ranges do not tile the code");
            return rep;
        }
        covered = g.end;
    }
    if (covered != code.words.size()) {
        rep.fail("group ranges do not cover all words");
        return rep;
    }

    int recert_s = -1;

    for (const auto& g : code.groups) {
        size_t count = g.end - g.begin;
        if (!g.idvec.empty()) {
            bool idok = true;
            for (size_t i = g.begin; i < g.end && idok; ++i)
                idok = code.words[i].identifying_vector() == g.idvec;
            if (idok)
                rep.ok(g.label + ": identifying vector uniform over " +
                       std::to_string(count) + " words");
            else
                rep.fail(g.label + ": identifying vector mismatch");

            int wt_first = 0;
            for (int c = 0; c < code.n - code.k; ++c) wt_first += g.idvec[(size_t)c];
            if (recert_s < 0 || wt_first < recert_s) recert_s = wt_first;

            if (g.filler) {
                auto ef = echelon_ferrers_form(g.idvec);
                if (ef.diagram && *ef.diagram == g.filler->diagram)
                    rep.ok(g.label + ": filler diagram matches echelon pattern");
                else
                    rep.fail(g.label + ": filler diagram mismatch");
                if (g.filler->delta < delta)
                    rep.fail(g.label + ": filler rank distance below d/2");
                if ((uint64_t)count != g.filler->size())
                    rep.fail(g.label + ": group size != filler size");

                if (count <= kPairwiseCap) {
                    bool okd = true;
                    for (size_t i = g.begin; i < g.end && okd; ++i)
                        for (size_t j = i + 1; j < g.end; ++j)
                            if (!subspace_distance_at_least(
                                    code.words[i], code.words[j], code.d)) {
                                okd = false;
                                break;
                            }
                    if (okd)
                        rep.ok(g.label + ": within-group distance exhaustive (" +
                               std::to_string(count) + " words)");
                    else
                        rep.fail(g.label + ": within-group distance violation");
                } else {
                    // Large group: certify through the filler.  The group is
                    // the linear filler space filled into one pattern, so
                    // min distance = 2 * min nonzero filler rank.
                    uint64_t sz = g.filler->size();
                    int minr = -1;
                    if (sz <= kFillerEnumCap) {
                        for (uint64_t idx = 1; idx < sz; ++idx) {
                            int r = g.filler->word(idx).rank();
                            if (minr < 0 || r < minr) minr = r;
                            if (minr >= 0 && minr < delta) break;
                        }
                        rep.ok(g.label + ": filler ranks enumerated (" +
                               std::to_string(sz - 1) + " nonzero words)");
                    } else {
                        Mcg64 rng(seed ^ (g.begin * 0x9e37));
                        for (int s = 0; s < (1 << 16); ++s) {
                            uint64_t idx = 1 + rng.below(sz - 1);
                            int r = g.filler->word(idx).rank();
                            if (minr < 0 || r < minr) minr = r;
                        }
                        rep.ok(g.label + ": filler ranks sampled (2^16 draws)");
                    }
                    if (minr >= delta)
                        rep.ok(g.label + ": min filler rank " +
                               std::to_string(minr) + " >= " +
                               std::to_string(delta));
                    else
                        rep.fail(g.label + ": filler rank " +
                                 std::to_string(minr) + " below " +
                                 std::to_string(delta));
                    // Spot-check that subspace distance tracks twice the
                    // filler rank difference inside the group.
                    Mcg64 rng(seed ^ 0x70617273ULL);
                    bool agree = true;
                    for (int s = 0; s < 1024 && agree; ++s) {
                        uint64_t a = rng.below(sz), b = rng.below(sz - 1);
                        if (b >= a) ++b;
                        int ds = subspace_distance(code.words[g.begin + a],
                                                   code.words[g.begin + b]);
                        int dr = diff_rank(g.filler->word(a), g.filler->word(b));
                        agree = ds == 2 * dr;
                    }
                    if (agree)
                        rep.ok(g.label +
                               ": subspace distance == 2 x filler rank "
                               "(1024 sampled pairs)");
                    else
                        rep.fail(g.label +
                                 ": subspace distance != 2 x filler rank");
                }
            }
        } else {
            // Right-side lift: re-derive companion matrices.
            std::vector<Mat> bs;
            bool shape_ok = true;
            for (size_t i = g.begin; i < g.end && shape_ok; ++i) {
                Mat b;
                shape_ok =
                    extract_right_companion(code.words[i], code.n - code.k, b);
                if (shape_ok) bs.push_back(std::move(b));
            }
            if (shape_ok)
                rep.ok(g.label + ": all " + std::to_string(count) +
                       " words are graphs over the last k coordinates");
            else {
                rep.fail(g.label + ": word is not rowspace(B | I)");
                continue;
            }
            bool rank_ok = true;
            for (const Mat& b : bs) {
                int r = b.rank();
                if (r < g.t1 || (g.t2 >= 0 && r > g.t2)) {
                    rank_ok = false;
                    break;
                }
            }
            if (rank_ok)
                rep.ok(g.label + ": companion ranks inside [" +
                       std::to_string(g.t1) + ", " + std::to_string(g.t2) + "]");
            else
                rep.fail(g.label + ": companion rank outside window");
            bool dist_ok = true;
            if (count <= (uint64_t(1) << 12)) {
                for (size_t i = 0; i < bs.size() && dist_ok; ++i)
                    for (size_t j = i + 1; j < bs.size(); ++j)
                        if (diff_rank(bs[i], bs[j]) < g.rank_distance) {
                            dist_ok = false;
                            break;
                        }
                if (dist_ok)
                    rep.ok(g.label + ": companion rank distance exhaustive");
                else
                    rep.fail(g.label + ": companion rank distance violation");
            } else {
                Mcg64 rng(seed ^ 0x677263ULL);
                for (int s = 0; s < (1 << 16) && dist_ok; ++s) {
                    uint64_t i = rng.below(bs.size());
                    uint64_t j = rng.below(bs.size() - 1);
                    if (j >= i) ++j;
                    dist_ok = diff_rank(bs[i], bs[j]) >= g.rank_distance;
                }
                if (dist_ok)
                    rep.ok(g.label + ": companion rank distance sampled (2^16)");
                else
                    rep.fail(g.label + ": companion rank distance violation");
            }
            // Cross distance to every pattern group: the group either packs
            // t2 + delta pivots into the first n - k coordinates or its
            // words carry delta rows the companion cannot meet.
            int ceiling = g.t2 >= 0 ? g.t2 : code.k;
            bool cover_ok = true;
            for (const auto& h : code.groups) {
                if (h.idvec.empty()) continue;
                int s = 0;
                for (int i = 0; i < code.n - code.k; ++i)
                    s += h.idvec[(size_t)i];
                if (s - delta >= ceiling) continue;
                if (h.filler && group_zero_tail_rows(h.idvec, *h.filler,
                                                     code.k) >= delta)
                    continue;
                cover_ok = false;
                rep.fail(h.label + ": pivot weight " + std::to_string(s) +
                         " and zero-tail rows both below companion ceiling " +
                         std::to_string(ceiling) + " + delta");
            }
            if (cover_ok)
                rep.ok(g.label +
                       ": every pattern group certified against ceiling " +
                       std::to_string(ceiling));
        }
    }

    if (code.certified_s >= 0) {
        if (recert_s == code.certified_s)
            rep.ok("re-certified s = " + std::to_string(recert_s));
        else
            rep.fail("certified s " + std::to_string(code.certified_s) +
                     " != re-derived " + std::to_string(recert_s));
    }

    // Cross-group identifying vector separation.
    bool id_sep = true;
    for (size_t a = 0; a < code.groups.size(); ++a) {
        const auto& ga = code.groups[a];
        if (ga.idvec.empty()) continue;
        for (size_t b = a + 1; b < code.groups.size(); ++b) {
            const auto& gb = code.groups[b];
            if (gb.idvec.empty()) continue;
            int dh = hamming(ga.idvec, gb.idvec);
            if (dh < code.d) {
                id_sep = false;
                rep.fail(ga.label + "/" + gb.label +
                         ": identifying vectors at Hamming distance " +
                         std::to_string(dh));
            }
        }
    }
    if (id_sep) rep.ok("identifying vectors pairwise >= d apart");

    // Seeded sample of cross-group pairs.  Draws that land inside one group
    // are discarded, so `cross_samples` counts pairs actually checked; the
    // draw budget of 64x bails out when one group dominates the code.
    if (code.groups.size() > 1 && cross_samples > 0) {
        Mcg64 rng(seed);
        uint64_t n = code.words.size();
        uint64_t done = 0, bad = 0;
        auto group_of = [&](uint64_t idx) {
            for (size_t g = 0; g < code.groups.size(); ++g)
                if (idx < code.groups[g].end) return g;
            return code.groups.size();
        };
        for (uint64_t s = 0; done < cross_samples && s < cross_samples * 64;
             ++s) {
            uint64_t i = rng.below(n);
            uint64_t j = rng.below(n - 1);
            if (j >= i) ++j;
            if (group_of(i) == group_of(j)) continue;
            ++done;
            if (!subspace_distance_at_least(code.words[i], code.words[j],
                                            code.d)) {
                ++bad;
                rep.fail("cross-group pair (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") below distance " +
                         std::to_string(code.d));
                break;
            }
        }
        if (bad == 0)
            rep.ok("cross-group distance sampled: " + std::to_string(done) +
                   " pairs");
    }

    return rep;
}

}  // namespace cdc

#include "cdc/ferrers.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdc/extfield.hpp"
#include "cdc/gabidulin.hpp"

namespace cdc {

FerrersDiagram::FerrersDiagram(std::vector<int> heights)
    : cols_(std::move(heights)) {
    if (cols_.empty()) throw std::invalid_argument("FerrersDiagram: empty");
    for (size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j] <= 0 || (j > 0 && cols_[j] < cols_[j - 1]))
            throw std::invalid_argument(
                "FerrersDiagram: heights must be positive and non-decreasing");
    }
}

int FerrersDiagram::dots() const {
    int s = 0;
    for (int h : cols_) s += h;
    return s;
}

FerrersDiagram FerrersDiagram::transposed() const {
    int m = rows();
    std::vector<int> t(m);
    // Row i of this diagram has #{j : gamma_j > i} dots; reversed, those row
    // lengths are the transposed heights in non-decreasing order.
    for (int i = 0; i < m; ++i) {
        int len = 0;
        for (int h : cols_)
            if (h > i) ++len;
        t[(size_t)(m - 1 - i)] = len;
    }
    return FerrersDiagram(std::move(t));
}

Mat reflect_word(const FerrersDiagram& f, const Mat& word) {
    int m = f.rows(), n = f.ncols();
    if (word.rows() != m || word.cols() != n)
        throw std::invalid_argument("reflect_word: shape mismatch");
    Mat out(word.field(), n, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) out.at(n - 1 - c, m - 1 - r) = word.at(r, c);
    return out;
}

int dimension_upper_bound(const FerrersDiagram& f, int delta) {
    if (delta < 1) throw std::invalid_argument("dimension_upper_bound: delta");
    int n = f.ncols();
    int best = -1;
    for (int i = 0; i < delta; ++i) {
        int drop_cols = delta - 1 - i;
        int nu = 0;
        for (int j = 0; j + drop_cols < n; ++j)
            nu += std::max(0, f.col_height(j) - i);
        if (best < 0 || nu < best) best = nu;
    }
    return best;
}

EchelonFerrersPattern echelon_ferrers_form(const std::vector<uint8_t>& v) {
    EchelonFerrersPattern ef;
    ef.v = v;
    for (size_t c = 0; c < v.size(); ++c) {
        if (v[c])
            ef.pivots.push_back((int)c);
        else
            ef.free_cols.push_back((int)c);
    }
    int seen = 0;
    size_t next_free = 0;
    for (size_t c = 0; c < v.size(); ++c) {
        if (v[c]) {
            ++seen;
        } else {
            ef.heights.push_back(seen);
            ++next_free;
        }
    }
    std::vector<int> positive;
    for (int h : ef.heights)
        if (h > 0) positive.push_back(h);
    if (!positive.empty()) ef.diagram = FerrersDiagram(std::move(positive));
    return ef;
}

Subspace fill_pattern(const GF& gf, const EchelonFerrersPattern& ef,
                      const Mat& word) {
    int n = (int)ef.v.size();
    int k = (int)ef.pivots.size();
    Mat basis(gf, k, n);
    for (int i = 0; i < k; ++i) basis.at(i, ef.pivots[(size_t)i]) = 1;
    if (ef.diagram) {
        if (word.rows() != ef.diagram->rows() ||
            word.cols() != ef.diagram->ncols())
            throw std::invalid_argument("fill_pattern: word shape mismatch");
        int wc = 0;
        for (size_t j = 0; j < ef.free_cols.size(); ++j) {
            int h = ef.heights[j];
            if (h == 0) continue;
            for (int r = 0; r < h; ++r)
                basis.at(r, ef.free_cols[j]) = word.at(r, wc);
            ++wc;
        }
    } else if (!(word.rows() == 0 && word.cols() == 0)) {
        throw std::invalid_argument("fill_pattern: pattern has no free cells");
    }
    return Subspace::from_rref(std::move(basis), ef.pivots);
}

uint64_t FdrmCode::size() const {
    uint32_t q = basis.empty() ? 1 : basis[0].field().q();
    uint64_t s = 1;
    for (int i = 0; i < dim(); ++i) {
        if (s > (uint64_t(1) << 62) / q)
            throw std::range_error("FdrmCode::size: overflow");
        s *= q;
    }
    return s;
}

Mat FdrmCode::word(uint64_t idx) const {
    Mat w(basis[0].field(), diagram.rows(), diagram.ncols());
    const GF& gf = basis[0].field();
    uint32_t q = gf.q();
    for (int b = dim(); b-- > 0;) {
        uint32_t c = (uint32_t)(idx % q);
        idx /= q;
        if (c == 0) continue;
        const Mat& m = basis[(size_t)b];
        for (int r = 0; r < w.rows(); ++r)
            for (int cc = 0; cc < w.cols(); ++cc)
                w.at(r, cc) = gf.add(w.at(r, cc), gf.mul(c, m.at(r, cc)));
    }
    return w;
}

std::vector<Mat> echelonize_on_diagram(const GF& gf, const FerrersDiagram& f,
                                       const std::vector<Mat>& raw) {
    int m = f.rows(), n = f.ncols();
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (f.has_dot(r, c)) cells.push_back({r, c});
    Mat flat(gf, (int)raw.size(), (int)cells.size());
    for (size_t i = 0; i < raw.size(); ++i)
        for (size_t j = 0; j < cells.size(); ++j)
            flat.at((int)i, (int)j) = raw[i].at(cells[j].first, cells[j].second);
    int rank = flat.rref_in_place();
    std::vector<Mat> out;
    out.reserve((size_t)rank);
    for (int i = 0; i < rank; ++i) {
        Mat w(gf, m, n);
        for (size_t j = 0; j < cells.size(); ++j)
            w.at(cells[j].first, cells[j].second) = flat.at(i, (int)j);
        out.push_back(std::move(w));
    }
    return out;
}

FdrmCode fdrmc_shortening(const GF& gf, const FerrersDiagram& f, int delta) {
    bool flip = f.rows() < f.ncols();
    FerrersDiagram work = flip ? f.transposed() : f;
    int m = work.rows(), n = work.ncols();
    if (delta < 1 || delta > n)
        throw std::invalid_argument("fdrmc_shortening: bad delta");

    // GF(q)-basis of the MRD span: expansions of y^s * (row t of the
    // Gabidulin generator).
    ExtField ext(gf, (uint32_t)m);
    GabidulinCode gab = make_gabidulin(ext, n, delta);
    std::vector<Mat> span;
    span.reserve((size_t)m * (size_t)gab.dim);
    for (int t = 0; t < gab.dim; ++t) {
        ExtField::Elem scale = 1;
        for (int s = 0; s < m; ++s) {
            std::vector<ExtField::Elem> w(gab.gen[(size_t)t]);
            for (auto& e : w) e = ext.mul(scale, e);
            span.push_back(expand_to_matrix(ext, w));
            scale = ext.mul(scale, ext.gen());
        }
    }

    // Solve for the combinations vanishing outside the diagram.
    std::vector<std::pair<int, int>> outside;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (!work.has_dot(r, c)) outside.push_back({r, c});
    Mat cons(gf, (int)outside.size(), (int)span.size());
    for (size_t i = 0; i < outside.size(); ++i)
        for (size_t b = 0; b < span.size(); ++b)
            cons.at((int)i, (int)b) =
                span[b].at(outside[i].first, outside[i].second);
    Mat null = cons.nullspace();

    std::vector<Mat> raw;
    raw.reserve((size_t)null.rows());
    for (int i = 0; i < null.rows(); ++i) {
        Mat w(gf, m, n);
        for (size_t b = 0; b < span.size(); ++b) {
            uint32_t c = null.at(i, (int)b);
            if (c == 0) continue;
            for (int r = 0; r < m; ++r)
                for (int cc = 0; cc < n; ++cc)
                    w.at(r, cc) = gf.add(w.at(r, cc), gf.mul(c, span[b].at(r, cc)));
        }
        raw.push_back(std::move(w));
    }

    FdrmCode code{work, delta, false, echelonize_on_diagram(gf, work, raw)};
    code.suboptimal = code.dim() < dimension_upper_bound(work, delta);

    if (flip) {
        std::vector<Mat> back;
        back.reserve(code.basis.size());
        for (const Mat& w : code.basis) back.push_back(reflect_word(work, w));
        FdrmCode orig{f, delta, code.suboptimal, echelonize_on_diagram(gf, f, back)};
        return orig;
    }
    return code;
}

FdrmCode fdrmc_block_sum(const FdrmCode& c1, const FdrmCode& c2) {
    const GF& gf = c1.basis.at(0).field();
    int m1 = c1.diagram.rows(), n1 = c1.diagram.ncols();
    int m2 = c2.diagram.rows(), n2 = c2.diagram.ncols();
    int dim = std::min(c1.dim(), c2.dim());

    std::vector<int> heights;
    for (int j = 0; j < n1; ++j) heights.push_back(c1.diagram.col_height(j));
    for (int j = 0; j < n2; ++j)
        heights.push_back(m1 + c2.diagram.col_height(j));
    FerrersDiagram comp(std::move(heights));

    std::vector<Mat> basis;
    basis.reserve((size_t)dim);
    for (int i = 0; i < dim; ++i) {
        Mat w(gf, m1 + m2, n1 + n2);
        for (int r = 0; r < m1; ++r)
            for (int c = 0; c < n1; ++c) w.at(r, c) = c1.basis[(size_t)i].at(r, c);
        for (int r = 0; r < m2; ++r)
            for (int c = 0; c < n2; ++c)
                w.at(m1 + r, n1 + c) = c2.basis[(size_t)i].at(r, c);
        basis.push_back(std::move(w));
    }
    FdrmCode out{comp, c1.delta + c2.delta, false, std::move(basis)};
    out.suboptimal = out.dim() < dimension_upper_bound(comp, out.delta);
    return out;
}

FdrmCode fdrmc_block_diag(const FdrmCode& c12, int n1) {
    const GF& gf = c12.basis.at(0).field();
    int m = c12.diagram.rows(), n = c12.diagram.ncols();
    if (n1 <= 0 || n1 >= n)
        throw std::invalid_argument("fdrmc_block_diag: bad split");
    int n2 = n - n1;
    for (int j = n1; j < n; ++j)
        if (c12.diagram.col_height(j) != m)
            throw std::invalid_argument(
                "fdrmc_block_diag: right block must have full columns");
    int ml = c12.diagram.col_height(n1 - 1);

    std::vector<int> heights;
    for (int j = 0; j < n1; ++j) heights.push_back(c12.diagram.col_height(j));
    for (int j = 0; j < m; ++j) heights.push_back(ml + n2);
    FerrersDiagram comp(std::move(heights));

    std::vector<Mat> basis;
    basis.reserve(c12.basis.size());
    for (const Mat& d : c12.basis) {
        Mat w(gf, ml + n2, n1 + m);
        for (int r = 0; r < ml; ++r)
            for (int c = 0; c < n1; ++c) w.at(r, c) = d.at(r, c);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n2; ++c) w.at(ml + c, n1 + r) = d.at(r, n1 + c);
        basis.push_back(std::move(w));
    }
    FdrmCode out{comp, c12.delta, c12.suboptimal, std::move(basis)};
    return out;
}

}  // namespace cdc

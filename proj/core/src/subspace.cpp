#include "cdc/subspace.hpp"

#include <cassert>
#include <stdexcept>

namespace cdc {

Subspace Subspace::from_span(Mat span) {
    std::vector<int> piv;
    int rank = span.rref_in_place(&piv);
    if (rank != span.rows())
        throw std::invalid_argument("Subspace: span is not full row rank");
    Subspace s;
    s.basis_ = std::move(span);
    s.pivots_ = std::move(piv);
    return s;
}

Subspace Subspace::from_rref(Mat basis, std::vector<int> pivots) {
#ifndef NDEBUG
    {
        Mat copy = basis;
        std::vector<int> piv;
        int rank = copy.rref_in_place(&piv);
        assert(rank == basis.rows() && copy == basis && piv == pivots);
    }
#endif
    Subspace s;
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

std::vector<uint8_t> Subspace::identifying_vector() const {
    std::vector<uint8_t> v(ambient(), 0);
    for (int c : pivots_) v[c] = 1;
    return v;
}

Mat Subspace::pivot_free_submatrix() const {
    std::vector<int> free_cols;
    std::vector<uint8_t> is_pivot(ambient(), 0);
    for (int c : pivots_) is_pivot[c] = 1;
    for (int c = 0; c < ambient(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat a(basis_.field(), dim(), (int)free_cols.size());
    for (int r = 0; r < dim(); ++r)
        for (size_t j = 0; j < free_cols.size(); ++j)
            a.at(r, (int)j) = basis_.at(r, free_cols[j]);
    return a;
}

namespace {

// Rank of v's basis after eliminating against u's echelon pivots; equals
// dim(u + v) - dim(u).  With stop >= 1 the scan returns early once the
// residue rank reaches stop.
int residue_rank(const Subspace& u, const Subspace& v, int stop) {
    Mat res = u.basis().reduce_rows_against(v.basis(), u.pivots());
    const GF& gf = res.field();
    int rank = 0;
    int rows = res.rows(), cols = res.cols();
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (res.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = c; j < cols; ++j)
                std::swap(res.at(rank, j), res.at(piv, j));
        uint32_t s = gf.inv(res.at(rank, c));
        for (int r = rank + 1; r < rows; ++r) {
            uint32_t f = res.at(r, c);
            if (f == 0) continue;
            uint32_t fs = gf.mul(f, s);
            for (int j = c; j < cols; ++j)
                res.at(r, j) = gf.sub(res.at(r, j), gf.mul(fs, res.at(rank, j)));
        }
        ++rank;
        if (stop > 0 && rank >= stop) return rank;
    }
    return rank;
}

}  // namespace

int subspace_distance(const Subspace& u, const Subspace& v) {
    int r = residue_rank(u, v, 0);
    // 2 rank(stack) - dim u - dim v with rank(stack) = dim u + r.
    return u.dim() - v.dim() + 2 * r;
}

bool subspace_distance_at_least(const Subspace& u, const Subspace& v, int d) {
    int need = d - u.dim() + v.dim();  // 2r >= need
    if (need <= 0) return true;
    int stop = (need + 1) / 2;
    if (stop > v.dim()) return false;
    return residue_rank(u, v, stop) >= stop;
}

int subspace_distance_via_intersection(const Subspace& u, const Subspace& v) {
    const GF& gf = u.basis().field();
    int n = u.ambient();
    int ku = u.dim(), kv = v.dim();
    // Zassenhaus array: rows [U | U] and [V | 0]; after elimination the rows
    // whose left half vanished carry a basis of the intersection in the
    // right half.
    Mat z(gf, ku + kv, 2 * n);
    for (int r = 0; r < ku; ++r)
        for (int c = 0; c < n; ++c) {
            z.at(r, c) = u.basis().at(r, c);
            z.at(r, n + c) = u.basis().at(r, c);
        }
    for (int r = 0; r < kv; ++r)
        for (int c = 0; c < n; ++c) z.at(ku + r, c) = v.basis().at(r, c);
    z.rref_in_place();
    int dim_cap = 0;
    for (int r = 0; r < z.rows(); ++r) {
        bool left_zero = true, right_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (z.at(r, c) != 0) left_zero = false;
        if (!left_zero) continue;
        for (int c = 0; c < n && right_zero; ++c)
            if (z.at(r, n + c) != 0) right_zero = false;
        if (!right_zero) ++dim_cap;
    }
    return ku + kv - 2 * dim_cap;
}

Subspace lift_to_subspace(const Mat& a) {
    const GF& gf = a.field();
    int k = a.rows();
    Mat basis = Mat::hstack(Mat::identity(gf, k), a);
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    return Subspace::from_rref(std::move(basis), std::move(piv));
}

}  // namespace cdc

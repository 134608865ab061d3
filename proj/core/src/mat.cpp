#include "cdc/mat.hpp"

#include <stdexcept>

namespace cdc {

bool Mat::is_zero() const {
    for (uint32_t v : a_)
        if (v) return false;
    return true;
}

Mat Mat::transposed() const {
    Mat t(*gf_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::rebased(const GF& gf) const {
    if (gf.q() != gf_->q())
        throw std::invalid_argument("Mat::rebased: field size mismatch");
    Mat t = *this;
    t.gf_ = &gf;
    return t;
}

Mat Mat::identity(const GF& gf, int n) {
    Mat m(gf, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    Mat m(*a.gf_, a.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
    }
    return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: col mismatch");
    Mat m(*a.gf_, a.rows_ + b.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) m.at(a.rows_ + r, c) = b.at(r, c);
    return m;
}

int Mat::rref_in_place(std::vector<int>* pivots) {
    const GF& gf = *gf_;
    if (pivots) pivots->clear();
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r) {
            if (at(r, c) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            uint32_t* a = row(rank);
            uint32_t* b = row(piv);
            for (int j = 0; j < cols_; ++j) std::swap(a[j], b[j]);
        }
        uint32_t s = gf.inv(at(rank, c));
        if (s != 1) {
            uint32_t* a = row(rank);
            for (int j = c; j < cols_; ++j) a[j] = gf.mul(a[j], s);
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            uint32_t f = at(r, c);
            if (f == 0) continue;
            const uint32_t* src = row(rank);
            uint32_t* dst = row(r);
            for (int j = c; j < cols_; ++j)
                dst[j] = gf.sub(dst[j], gf.mul(f, src[j]));
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

int Mat::rank() const {
    Mat copy = *this;
    return copy.rref_in_place();
}

Mat Mat::nullspace() const {
    Mat r = *this;
    std::vector<int> piv;
    int rank = r.rref_in_place(&piv);
    int nullity = cols_ - rank;
    Mat basis(*gf_, nullity, cols_);
    std::vector<int> pivot_of_col(cols_, -1);
    for (int i = 0; i < rank; ++i) pivot_of_col[piv[i]] = i;
    int out = 0;
    for (int c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        // Free column c: set x_c = 1, solve the pivot coordinates.
        basis.at(out, c) = 1;
        for (int i = 0; i < rank; ++i)
            basis.at(out, piv[i]) = gf_->neg(r.at(i, c));
        ++out;
    }
    return basis;
}

Mat Mat::reduce_rows_against(const Mat& b,
                             const std::vector<int>& pivots) const {
    const GF& gf = *gf_;
    Mat res = b;
    for (size_t i = 0; i < pivots.size(); ++i) {
        int pc = pivots[i];
        const uint32_t* src = row((int)i);
        for (int r = 0; r < res.rows_; ++r) {
            uint32_t f = res.at(r, pc);
            if (f == 0) continue;
            uint32_t* dst = res.row(r);
            for (int j = pc; j < cols_; ++j)
                dst[j] = gf.sub(dst[j], gf.mul(f, src[j]));
        }
    }
    return res;
}

bool Mat::operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

}  // namespace cdc

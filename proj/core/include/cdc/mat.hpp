// Dense matrices over GF(q) with the row operations everything else here is
// built on: reduced row echelon form, rank, nullspace, stacking.
//
// A Mat borrows its field by pointer; the caller keeps the GF alive for the
// lifetime of the matrix.  Entries are stored row major.

#pragma once

#include <cstdint>
#include <vector>

#include "cdc/gf.hpp"

namespace cdc {

class Mat {
public:
    Mat() : gf_(nullptr), rows_(0), cols_(0) {}
    Mat(const GF& gf, int rows, int cols)
        : gf_(&gf), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {}

    const GF& field() const { return *gf_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
    uint32_t& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    const uint32_t* row(int r) const { return a_.data() + (size_t)r * cols_; }
    uint32_t* row(int r) { return a_.data() + (size_t)r * cols_; }

    bool is_zero() const;
    Mat transposed() const;

    // Same entries bound to another GF instance of identical size.  Element
    // labels are representation-stable because moduli are canonical.
    Mat rebased(const GF& gf) const;

    static Mat identity(const GF& gf, int n);
    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);

    // In place Gauss-Jordan elimination.  Returns the rank; if pivots is
    // non-null it receives the pivot column of each of the first rank rows.
    int rref_in_place(std::vector<int>* pivots = nullptr);

    int rank() const;

    // Basis of the right nullspace {x : A x = 0}, one solution per row of the
    // returned matrix (so the result is nullity x cols()).
    Mat nullspace() const;

    // Rows of b reduced against the pivots of this matrix, which must be in
    // reduced row echelon form.  The rank of the residue equals
    // rank(this stacked b) - rank(this).
    Mat reduce_rows_against(const Mat& b, const std::vector<int>& pivots) const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    // Lexicographic on (rows, cols, entries); total order used for sorting
    // and deduplicating code words.
    bool operator<(const Mat& o) const;

    const std::vector<uint32_t>& data() const { return a_; }

private:
    const GF* gf_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

}  // namespace cdc

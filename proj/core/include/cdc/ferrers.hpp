// Ferrers diagrams, echelon patterns, and rank-metric codes supported on a
// diagram.
//
// A diagram is stored as its column heights gamma_0 <= ... <= gamma_{n-1},
// left to right.  Columns are top justified: column j has dots in rows
// 0..gamma_j - 1, so row 0 is the longest row and the dot set is exactly the
// shape of the free entries of a reduced echelon matrix when read under an
// identifying vector (ones mark pivot columns, and the free cells of column
// c sit in the rows whose pivot lies left of c).
//
// An FdrmCode is a GF(q)-linear space of matrices supported on a diagram
// whose nonzero members all have rank >= delta.  The main construction
// shortens an MRD code down to the diagram cells; two combination rules
// build codes on composite diagrams out of smaller ones.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdc/gf.hpp"
#include "cdc/mat.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

class FerrersDiagram {
public:
    // Pre: heights non-empty, positive, non-decreasing.
    explicit FerrersDiagram(std::vector<int> heights);

    int ncols() const { return (int)cols_.size(); }
    int rows() const { return cols_.back(); }
    int col_height(int j) const { return cols_[(size_t)j]; }
    const std::vector<int>& col_heights() const { return cols_; }
    int dots() const;
    bool has_dot(int r, int c) const { return r < cols_[(size_t)c]; }

    // Reflection that keeps the result top justified with non-decreasing
    // heights; column heights become the reversed row lengths.  A matrix
    // supported on the diagram maps to one supported on the transpose via
    // (r, c) -> (ncols-1-c, rows-1-r), which preserves rank.
    FerrersDiagram transposed() const;

    bool operator==(const FerrersDiagram& o) const { return cols_ == o.cols_; }

private:
    std::vector<int> cols_;
};

// Anti-diagonal reflection of a matrix supported on f, landing on
// f.transposed().
Mat reflect_word(const FerrersDiagram& f, const Mat& word);

// min over i in [0, delta) of the number of dots outside the first i rows
// and outside the rightmost delta - 1 - i columns.  Upper bound on the
// dimension of any FdrmCode on f with distance delta.
int dimension_upper_bound(const FerrersDiagram& f, int delta);

// The shape a reduced echelon matrix with pivot set v takes: pivots, free
// columns, free-column heights, and the induced diagram with zero-height
// columns dropped.
struct EchelonFerrersPattern {
    std::vector<uint8_t> v;
    std::vector<int> pivots;
    std::vector<int> free_cols;
    std::vector<int> heights;  // per free column, may be 0
    std::optional<FerrersDiagram> diagram;
};

EchelonFerrersPattern echelon_ferrers_form(const std::vector<uint8_t>& v);

// Subspace whose echelon basis has pivot set ef.v and free entries given by
// word, a matrix shaped like ef.diagram.  Pre: ef has a diagram iff word is
// non-empty.
Subspace fill_pattern(const GF& gf, const EchelonFerrersPattern& ef,
                      const Mat& word);

struct FdrmCode {
    FerrersDiagram diagram;
    int delta = 0;
    // Dimension fell short of dimension_upper_bound(diagram, delta).
    bool suboptimal = false;
    // Echelonized over the diagram cells in row-major order, so enumeration
    // is canonical.
    std::vector<Mat> basis;

    int dim() const { return (int)basis.size(); }
    uint64_t size() const;  // q^dim; pre: fits in 63 bits

    // Word for coefficient index idx written base q, first basis element
    // most significant.  Pre: idx < size().
    Mat word(uint64_t idx) const;
};

// Echelonize a spanning set of diagram-supported matrices over the cell
// coordinates in row-major order.  Returns a canonical basis of the span;
// the input matrices must vanish off the diagram.
std::vector<Mat> echelonize_on_diagram(const GF& gf, const FerrersDiagram& f,
                                       const std::vector<Mat>& raw);

// Shortening of MRD[rows x cols, delta] to the cells of f: the subspace of
// codewords vanishing outside f.  Dimension is at least
// dots(f) - max(rows, cols) * (delta - 1); when the rightmost delta - 1
// columns of the taller orientation are full the dimension meets the
// diagram upper bound.  All matrices are built over gf, which must outlive
// the result.  Pre: delta <= min(rows, cols).
FdrmCode fdrmc_shortening(const GF& gf, const FerrersDiagram& f, int delta);

// Code on the composite diagram [F1, full; 0, F2] with words [A, 0; 0, B],
// A and B drawn from c1 and c2 with shared coefficients.  Dimension is
// min(dim c1, dim c2); distance adds.
FdrmCode fdrmc_block_sum(const FdrmCode& c1, const FdrmCode& c2);

// Splits each word D of c12 after column n1 and re-lays it as
// [D_left, 0; 0, D_right^T].  The right block of the input diagram must have
// full columns.  Dimension and distance carry over.
FdrmCode fdrmc_block_diag(const FdrmCode& c12, int n1);

}  // namespace cdc

// Subspaces of GF(q)^n and the subspace metric.
//
// A Subspace stores the unique reduced row echelon basis of a k-dimensional
// subspace together with its pivot columns.  The subspace distance is
//
//   d_S(U, V) = dim U + dim V - 2 dim(U cap V)
//             = 2 rank(U stacked V) - dim U - dim V,
//
// computed by reducing V's basis against U's pivots and ranking the residue.
// A second, structurally independent evaluation goes through an explicit
// intersection basis (Zassenhaus array); the two are cross-checked in the
// verification layer.

#pragma once

#include <cstdint>
#include <vector>

#include "cdc/mat.hpp"

namespace cdc {

class Subspace {
public:
    Subspace() = default;

    // Canonicalizes span by row reduction.  Pre: span has full row rank
    // (throws otherwise); ambient dimension is span.cols().
    static Subspace from_span(Mat span);

    // Pre: basis is already in reduced row echelon form with full row rank.
    // Cheaper than from_span; validated in debug builds only.
    static Subspace from_rref(Mat basis, std::vector<int> pivots);

    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Characteristic vector of the pivot set: v[j] = 1 iff column j is a
    // pivot of the echelon basis.
    std::vector<uint8_t> identifying_vector() const;

    // The dim() x (ambient() - dim()) matrix of basis entries in the
    // non-pivot columns, kept in column order.
    Mat pivot_free_submatrix() const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

private:
    Mat basis_;
    std::vector<int> pivots_;
};

int subspace_distance(const Subspace& u, const Subspace& v);

// Early-exit variant: true iff d_S(u, v) >= d.  Elimination stops as soon as
// the residue rank reaches ceil over the needed threshold, so far-apart pairs
// are cheap to certify.
bool subspace_distance_at_least(const Subspace& u, const Subspace& v, int d);

// Distance via an explicit basis of the intersection, using the Zassenhaus
// array [U U; V 0].  Slower; used as an independent oracle.
int subspace_distance_via_intersection(const Subspace& u, const Subspace& v);

// Row space of [I_k | a].
Subspace lift_to_subspace(const Mat& a);

}  // namespace cdc

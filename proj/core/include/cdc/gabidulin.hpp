// Gabidulin codes and maximum rank distance (MRD) matrix codes.
//
// G[m x n, delta] over GF(q^m), n <= m, is the linear code of length n and
// dimension K = n - delta + 1 generated by the rows
//
//   (g_0^{[i]}, ..., g_{n-1}^{[i]}),   i = 0, ..., n - delta,
//
// where g_j = y^j runs through the first n polynomial-basis elements of
// GF(q^m) and a^{[i]} = a^(q^i) is the i-th Frobenius power.  Expanding each
// symbol into its GF(q) coordinate column turns a codeword into an m x n
// matrix; the resulting matrix code has minimum rank distance delta and
// meets the Singleton bound, i.e. it is MRD.  Rectangular shapes with more
// columns than rows are handled by transposing.
//
// Codewords are enumerated in message order: message index idx in
// [0, q^{mK}) is written base q^m with the most significant digit giving the
// coefficient of the first generator row.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "cdc/extfield.hpp"
#include "cdc/gf.hpp"
#include "cdc/mat.hpp"

namespace cdc {

// Hard cap on exhaustive codeword enumeration.
constexpr uint64_t kEnumCap = uint64_t(1) << 24;

struct GabidulinCode {
    const ExtField* field = nullptr;  // GF(q^m) over GF(q)
    int n = 0, delta = 0;
    int dim = 0;  // n - delta + 1, over GF(q^m)
    std::vector<std::vector<ExtField::Elem>> gen;  // dim rows of length n

    std::vector<ExtField::Elem> codeword(
        const std::vector<ExtField::Elem>& msg) const;
};

// Pre: 1 <= delta <= n <= f.m().
GabidulinCode make_gabidulin(const ExtField& f, int n, int delta);

// MRD[rows x cols, delta] as an enumerable matrix code over GF(q).
class MrdCode {
public:
    MrdCode(uint32_t q, int rows, int cols, int delta);

    uint32_t q() const { return base_->q(); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int delta() const { return delta_; }
    const GF& base() const { return *base_; }
    const ExtField& field() const { return *field_; }
    const GabidulinCode& gabidulin() const { return gab_; }
    bool transposed() const { return transposed_; }

    // q^{max(rows,cols) * (min(rows,cols) - delta + 1)}.
    mpz_class size() const;
    // True iff size() fits under the enumeration cap.
    bool enumerable() const;
    uint64_t size_u64() const;

    // Codeword idx in message order.  Pre: idx < size() and enumerable().
    Mat word(uint64_t idx) const;

    // A basis of the code as a GF(q)-linear space: the matrices
    // expand(y^s * row_t), t major then s, m * (n - delta + 1) in total.
    std::vector<Mat> span_basis() const;

private:
    std::unique_ptr<GF> base_;
    std::unique_ptr<ExtField> field_;
    GabidulinCode gab_;
    int rows_, cols_, delta_;
    bool transposed_;
};

// Number of codewords of each rank in MRD[m x n, delta] over GF(q), by the
// closed form (exact, arbitrary precision).  Keys are the ranks with nonzero
// count: 0 and delta..min(m,n).
std::map<int, mpz_class> rank_distribution(uint32_t q, int m, int n, int delta);

// Histogram of ranks over an exhaustive enumeration.  Pre: enumerable().
std::map<int, uint64_t> rank_histogram(const MrdCode& code);

}  // namespace cdc

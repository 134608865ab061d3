// Shared test helpers: seeded random matrices and subspaces, small matrix
// algebra the library itself does not expose, and paths into the source
// tree for golden files.

#pragma once

#include <string>
#include <vector>

#include "cdc/gf.hpp"
#include "cdc/mat.hpp"
#include "cdc/prng.hpp"
#include "cdc/subspace.hpp"

inline std::string source_path(const std::string& rel) {
    return std::string(CDC_SOURCE_DIR "/") + rel;
}

inline cdc::Mat random_mat(const cdc::GF& gf, int rows, int cols,
                           cdc::Mcg64& rng) {
    cdc::Mat a(gf, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a.at(r, c) = (uint32_t)rng.below(gf.q());
    return a;
}

inline cdc::Mat random_full_rank(const cdc::GF& gf, int rows, int cols,
                                 cdc::Mcg64& rng) {
    for (;;) {
        cdc::Mat a = random_mat(gf, rows, cols, rng);
        if (a.rank() == std::min(rows, cols)) return a;
    }
}

inline cdc::Subspace random_subspace(const cdc::GF& gf, int n, int k,
                                     cdc::Mcg64& rng) {
    return cdc::Subspace::from_span(random_full_rank(gf, k, n, rng));
}

inline cdc::Mat mat_mul(const cdc::Mat& a, const cdc::Mat& b) {
    const cdc::GF& gf = a.field();
    cdc::Mat c(gf, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            uint32_t acc = 0;
            for (int t = 0; t < a.cols(); ++t)
                acc = gf.add(acc, gf.mul(a.at(i, t), b.at(t, j)));
            c.at(i, j) = acc;
        }
    return c;
}

inline cdc::Mat mat_sub(const cdc::Mat& a, const cdc::Mat& b) {
    const cdc::GF& gf = a.field();
    cdc::Mat c(gf, a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int col = 0; col < a.cols(); ++col)
            c.at(r, col) = gf.sub(a.at(r, col), b.at(r, col));
    return c;
}

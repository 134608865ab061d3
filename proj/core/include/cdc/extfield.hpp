// The extension field GF(q^m) over a base field GF(q), q itself possibly a
// prime power.
//
// An element is a polynomial c_0 + c_1 y + ... + c_{m-1} y^{m-1} with c_i in
// GF(q), reduced modulo a fixed monic irreducible of degree m over GF(q).
// It is packed into a uint64_t as the base-q integer sum c_i q^i, so the
// packed values enumerate the field as 0, 1, ..., q^m - 1 and the i-th
// base-q digit is exactly the i-th coordinate over GF(q).  The modulus is
// canonical in the same sense as in GF: smallest base-q encoding among monic
// irreducibles of degree m (irreducibility by trial division, coefficient
// arithmetic in GF(q)).
//
// Requires q^m <= 2^62.

#pragma once

#include <cstdint>
#include <vector>

#include "cdc/gf.hpp"
#include "cdc/mat.hpp"

namespace cdc {

class ExtField {
public:
    using Elem = uint64_t;

    ExtField(const GF& base, uint32_t m);

    const GF& base() const { return *base_; }
    uint32_t m() const { return m_; }
    uint64_t size() const { return size_; }  // q^m
    const std::vector<uint32_t>& modulus() const { return mod_; }

    // Base-q digit i of a, i.e. the i-th coordinate of a over GF(q).
    uint32_t digit(Elem a, uint32_t i) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, uint64_t e) const;
    // Pre: a != 0.
    Elem inv(Elem a) const;

    // a^(q^i), the i-th power of the q-Frobenius.
    Elem frobenius(Elem a, uint32_t i) const;

    // The generator y of the polynomial basis {1, y, ..., y^{m-1}}; its
    // packed value is q.
    Elem gen() const { return q_; }

private:
    void unpack(Elem a, uint32_t* d) const;
    Elem pack(const uint32_t* d) const;

    const GF* base_;
    uint32_t q_, m_;
    uint64_t size_;
    std::vector<uint32_t> mod_;  // constant first, length m+1, monic
};

// Expand a word over GF(q^m) of length n into the m x n matrix over GF(q)
// whose column j holds the coordinates of word[j].
Mat expand_to_matrix(const ExtField& f, const std::vector<ExtField::Elem>& word);

// Inverse of expand_to_matrix; a must be m x n.
std::vector<ExtField::Elem> collapse_to_word(const ExtField& f, const Mat& a);

}  // namespace cdc

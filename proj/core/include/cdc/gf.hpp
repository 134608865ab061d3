// Arithmetic in GF(q) for prime powers q = p^e.
//
// Elements are integers in [0, q).  For e > 1 the integer is read as a base-p
// digit string c_0 + c_1 p + ... + c_{e-1} p^{e-1} and stands for the residue
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} modulo a fixed monic irreducible of
// degree e.  The modulus is canonical: among all monic irreducibles of degree
// e over GF(p) we pick the one whose coefficient string (including the
// leading 1) encodes to the smallest base-p integer.  That gives x^2+x+1 for
// q=4, x^3+x+1 for q=8, x^2+1 for q=9, x^4+x+1 for q=16, and so on, so the
// labelling of elements is reproducible across runs and machines.
//
// Multiplication and inversion are table driven; q is capped at 512 so the
// tables stay small.

#pragma once

#include <cstdint>
#include <vector>

namespace cdc {

class GF {
public:
    explicit GF(uint32_t q);

    uint32_t q() const { return q_; }
    uint32_t p() const { return p_; }
    uint32_t degree() const { return e_; }

    // Coefficients of the modulus, constant term first, length degree()+1,
    // leading coefficient 1.  For e == 1 this is {0, 1}, i.e. the polynomial x.
    const std::vector<uint32_t>& modulus() const { return mod_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        return add_[a * q_ + b];
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return add_[a * q_ + neg_[b]];
    }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return mul_[a * q_ + b];
    }
    // Pre: a != 0.
    uint32_t inv(uint32_t a) const { return inv_[a]; }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv_[b]); }

    uint32_t pow(uint32_t a, uint64_t e) const;

    bool operator==(const GF& o) const { return q_ == o.q_; }

private:
    uint32_t q_, p_, e_;
    std::vector<uint32_t> mod_;
    std::vector<uint32_t> add_, mul_, neg_, inv_;
};

// True iff q is a prime power p^e with p prime and e >= 1.  On success the
// outputs receive p and e.
bool factor_prime_power(uint32_t q, uint32_t& p, uint32_t& e);

}  // namespace cdc

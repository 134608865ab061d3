// Exact q-binomial coefficients and small power helpers on top of GMP.

#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace cdc {

// q^e as an exact integer.
mpz_class zpow(uint32_t q, uint64_t e);

// Gaussian (q-binomial) coefficient [n choose k]_q: the number of
// k-dimensional subspaces of GF(q)^n.  Zero when k < 0 or k > n.
//
// Evaluated as prod_{t=0}^{k-1} (q^{n-t} - 1) / (q^{t+1} - 1) with the
// division interleaved after each numerator factor; every intermediate
// quotient is integral in that order.
mpz_class gaussian_coefficient(uint32_t q, long n, long k);

}  // namespace cdc

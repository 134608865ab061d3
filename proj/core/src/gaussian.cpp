#include "cdc/gaussian.hpp"

#include <stdexcept>

namespace cdc {

mpz_class zpow(uint32_t q, uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

mpz_class gaussian_coefficient(uint32_t q, long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    mpz_class val = 1;
    for (long t = 0; t < k; ++t) {
        val *= zpow(q, (uint64_t)(n - t)) - 1;
        mpz_class den = zpow(q, (uint64_t)(t + 1)) - 1;
        mpz_class rem;
        mpz_tdiv_qr(val.get_mpz_t(), rem.get_mpz_t(), val.get_mpz_t(),
                    den.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("gaussian_coefficient: inexact division");
    }
    return val;
}

}  // namespace cdc

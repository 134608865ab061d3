#include "cdc/gf.hpp"

#include <stdexcept>
#include <string>

namespace cdc {

bool factor_prime_power(uint32_t q, uint32_t& p, uint32_t& e) {
    if (q < 2) return false;
    uint32_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    p = (d * d <= q) ? d : q;
    e = 0;
    uint32_t m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return m == 1;
}

namespace {

// Dense polynomials over Z_p, constant term first.  Only used while hunting
// for the canonical modulus, so clarity over speed.
using Poly = std::vector<uint32_t>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_rem(Poly a, const Poly& b, uint32_t p) {
    // b is monic.
    while (a.size() >= b.size()) {
        uint32_t c = a.back();
        if (c != 0) {
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t t = (uint64_t)c * b[i] % p;
                a[shift + i] = (uint32_t)((a[shift + i] + p - t) % p);
            }
        }
        a.pop_back();
        a = trim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return a;
}

// Monic polynomial of degree d whose non-leading coefficients are the base-p
// digits of v.
Poly monic_from_index(uint64_t v, uint32_t d, uint32_t p) {
    Poly f(d + 1, 0);
    for (uint32_t i = 0; i < d; ++i) {
        f[i] = (uint32_t)(v % p);
        v /= p;
    }
    f[d] = 1;
    return f;
}

bool is_irreducible(const Poly& f, uint32_t p) {
    uint32_t d = (uint32_t)f.size() - 1;
    if (f[0] == 0) return false;  // divisible by x
    // Trial division by every monic polynomial of degree 1 .. d/2.
    for (uint32_t dd = 1; 2 * dd <= d; ++dd) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < dd; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            Poly g = monic_from_index(v, dd, p);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly canonical_modulus(uint32_t p, uint32_t e) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
        Poly f = monic_from_index(v, e, p);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

GF::GF(uint32_t q) : q_(q) {
    if (!factor_prime_power(q, p_, e_))
        throw std::invalid_argument("GF: " + std::to_string(q) +
                                    " is not a prime power");
    if (q > 512)
        throw std::invalid_argument("GF: field size capped at 512");

    if (e_ == 1) {
        mod_ = {0, 1};
    } else {
        mod_ = canonical_modulus(p_, e_);
    }

    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    // Digitwise mod-p addition; for p = 2 this is plain xor.
    auto digits = [&](uint32_t v) {
        std::vector<uint32_t> d(e_);
        for (uint32_t i = 0; i < e_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    };
    auto pack = [&](const std::vector<uint32_t>& d) {
        uint32_t v = 0;
        for (uint32_t i = e_; i-- > 0;) v = v * p_ + d[i];
        return v;
    };

    for (uint32_t a = 0; a < q_; ++a) {
        auto da = digits(a);
        for (auto& c : da) c = (p_ - c) % p_;
        neg_[a] = pack(da);
    }
    for (uint32_t a = 0; a < q_; ++a) {
        auto da = digits(a);
        for (uint32_t b = 0; b < q_; ++b) {
            auto dband = digits(b);
            std::vector<uint32_t> s(e_);
            for (uint32_t i = 0; i < e_; ++i) s[i] = (da[i] + dband[i]) % p_;
            add_[(size_t)a * q_ + b] = pack(s);
        }
    }

    for (uint32_t a = 0; a < q_; ++a) {
        auto da = digits(a);
        for (uint32_t b = 0; b < q_; ++b) {
            auto db = digits(b);
            // Schoolbook product, then reduce by the monic modulus.
            std::vector<uint32_t> prod(2 * e_ - 1, 0);
            for (uint32_t i = 0; i < e_; ++i)
                for (uint32_t j = 0; j < e_; ++j)
                    prod[i + j] = (uint32_t)((prod[i + j] +
                                              (uint64_t)da[i] * db[j]) % p_);
            for (uint32_t i = 2 * e_ - 2; i >= e_; --i) {
                uint32_t c = prod[i];
                if (c != 0) {
                    for (uint32_t j = 0; j < e_; ++j) {
                        uint64_t t = (uint64_t)c * mod_[j] % p_;
                        prod[i - e_ + j] =
                            (uint32_t)((prod[i - e_ + j] + p_ - t) % p_);
                    }
                }
                if (i == e_) break;
            }
            prod.resize(e_);
            mul_[(size_t)a * q_ + b] = pack(prod);
        }
    }

    for (uint32_t a = 1; a < q_; ++a) {
        for (uint32_t b = 1; b < q_; ++b) {
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] == 0)
            throw std::logic_error("GF: element without inverse");
    }
}

uint32_t GF::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace cdc

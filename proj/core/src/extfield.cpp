#include "cdc/extfield.hpp"

#include <stdexcept>

namespace cdc {

namespace {
constexpr uint32_t kMaxDeg = 64;
}

ExtField::ExtField(const GF& base, uint32_t m)
    : base_(&base), q_(base.q()), m_(m) {
    if (m == 0 || m >= kMaxDeg)
        throw std::invalid_argument("ExtField: bad extension degree");
    size_ = 1;
    for (uint32_t i = 0; i < m; ++i) {
        if (size_ > (uint64_t(1) << 62) / q_)
            throw std::invalid_argument("ExtField: q^m exceeds 2^62");
        size_ *= q_;
    }

    if (m == 1) {
        mod_ = {0, 1};
        return;
    }

    // Canonical modulus: scan monic degree-m polynomials in base-q encoding
    // order and keep the first irreducible.  Trial division by all monic
    // divisor candidates of degree <= m/2 (values packed base q).
    std::vector<uint32_t> f(m + 1), g;
    auto rem_is_zero = [&](const std::vector<uint32_t>& num,
                           const std::vector<uint32_t>& den) {
        std::vector<uint32_t> r = num;
        size_t dd = den.size() - 1;
        while (r.size() > dd) {
            uint32_t c = r.back();
            if (c != 0) {
                size_t shift = r.size() - den.size();
                for (size_t i = 0; i < den.size(); ++i)
                    r[shift + i] =
                        base_->sub(r[shift + i], base_->mul(c, den[i]));
            }
            r.pop_back();
            while (r.size() > dd && r.back() == 0) r.pop_back();
        }
        for (uint32_t v : r)
            if (v) return false;
        return true;
    };
    for (uint64_t v = 0; v < size_; ++v) {
        uint64_t t = v;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = (uint32_t)(t % q_);
            t /= q_;
        }
        f[m] = 1;
        if (f[0] == 0) continue;
        bool irred = true;
        for (uint32_t dd = 1; 2 * dd <= m && irred; ++dd) {
            uint64_t cnt = 1;
            for (uint32_t i = 0; i < dd; ++i) cnt *= q_;
            g.assign(dd + 1, 0);
            g[dd] = 1;
            for (uint64_t w = 0; w < cnt && irred; ++w) {
                uint64_t u = w;
                for (uint32_t i = 0; i < dd; ++i) {
                    g[i] = (uint32_t)(u % q_);
                    u /= q_;
                }
                if (rem_is_zero(f, g)) irred = false;
            }
        }
        if (irred) {
            mod_.assign(f.begin(), f.end());
            return;
        }
    }
    throw std::logic_error("ExtField: no irreducible modulus found");
}

void ExtField::unpack(Elem a, uint32_t* d) const {
    if (q_ == 2) {
        for (uint32_t i = 0; i < m_; ++i) d[i] = (a >> i) & 1;
    } else {
        for (uint32_t i = 0; i < m_; ++i) {
            d[i] = (uint32_t)(a % q_);
            a /= q_;
        }
    }
}

ExtField::Elem ExtField::pack(const uint32_t* d) const {
    Elem v = 0;
    for (uint32_t i = m_; i-- > 0;) v = v * q_ + d[i];
    return v;
}

uint32_t ExtField::digit(Elem a, uint32_t i) const {
    if (q_ == 2) return (a >> i) & 1;
    for (uint32_t t = 0; t < i; ++t) a /= q_;
    return (uint32_t)(a % q_);
}

ExtField::Elem ExtField::add(Elem a, Elem b) const {
    if (q_ == 2) return a ^ b;
    uint32_t da[kMaxDeg], db[kMaxDeg];
    unpack(a, da);
    unpack(b, db);
    for (uint32_t i = 0; i < m_; ++i) da[i] = base_->add(da[i], db[i]);
    return pack(da);
}

ExtField::Elem ExtField::sub(Elem a, Elem b) const {
    if (q_ == 2) return a ^ b;
    uint32_t da[kMaxDeg], db[kMaxDeg];
    unpack(a, da);
    unpack(b, db);
    for (uint32_t i = 0; i < m_; ++i) da[i] = base_->sub(da[i], db[i]);
    return pack(da);
}

ExtField::Elem ExtField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t da[kMaxDeg], db[kMaxDeg], prod[2 * kMaxDeg];
    unpack(a, da);
    unpack(b, db);
    for (uint32_t i = 0; i < 2 * m_ - 1; ++i) prod[i] = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) {
            if (db[j] == 0) continue;
            prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
        }
    }
    // Reduce by the monic modulus, highest term first.
    for (uint32_t i = 2 * m_ - 2; i >= m_; --i) {
        uint32_t c = prod[i];
        if (c != 0) {
            for (uint32_t j = 0; j < m_; ++j)
                prod[i - m_ + j] =
                    base_->sub(prod[i - m_ + j], base_->mul(c, mod_[j]));
        }
        if (i == m_) break;
    }
    return pack(prod);
}

ExtField::Elem ExtField::pow(Elem a, uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ExtField::Elem ExtField::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("ExtField::inv(0)");
    // a^(q^m - 2); the multiplicative group has order q^m - 1.
    return pow(a, size_ - 2);
}

ExtField::Elem ExtField::frobenius(Elem a, uint32_t i) const {
    for (uint32_t t = 0; t < i; ++t) a = pow(a, q_);
    return a;
}

Mat expand_to_matrix(const ExtField& f, const std::vector<ExtField::Elem>& word) {
    Mat a(f.base(), (int)f.m(), (int)word.size());
    for (size_t j = 0; j < word.size(); ++j)
        for (uint32_t i = 0; i < f.m(); ++i)
            a.at((int)i, (int)j) = f.digit(word[j], i);
    return a;
}

std::vector<ExtField::Elem> collapse_to_word(const ExtField& f, const Mat& a) {
    if (a.rows() != (int)f.m())
        throw std::invalid_argument("collapse_to_word: row count != m");
    std::vector<ExtField::Elem> w(a.cols(), 0);
    for (int j = 0; j < a.cols(); ++j) {
        uint64_t v = 0;
        for (int i = a.rows(); i-- > 0;) v = v * f.base().q() + a.at(i, j);
        w[(size_t)j] = v;
    }
    return w;
}

}  // namespace cdc

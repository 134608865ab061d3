#include "cdc/bounds.hpp"

#include <stdexcept>

#include "cdc/gaussian.hpp"
#include "cdc/grmc.hpp"

namespace cdc {

namespace {

// q^e for possibly negative e.
mpq_class qpow(uint32_t q, long e) {
    if (e >= 0) return mpq_class(zpow(q, (uint64_t)e));
    mpq_class r(1, zpow(q, (uint64_t)(-e)));
    r.canonicalize();
    return r;
}

mpz_class floor_q(const mpq_class& v) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v.get_num().get_mpz_t(),
               v.get_den().get_mpz_t());
    return r;
}

long floor_div(long a, long b) {
    long d = a / b;
    return (a % b != 0 && (a ^ b) < 0) ? d - 1 : d;
}

long ceil_div_l(long a, long b) { return -floor_div(-a, b); }

}  // namespace

mpz_class lifted_size(uint32_t q, int n, int k, int delta) {
    return zpow(q, (uint64_t)(n - k) * (uint64_t)(k - delta + 1));
}

BoundRecord bound_parallel(uint32_t q, int n, int k, int delta) {
    if (!(n >= 2 * k && 2 * k > 2 * delta && delta > 0))
        throw std::invalid_argument("parallel: need n >= 2k > 2 delta > 0");
    BoundRecord r{"parallel", q, n, k, delta};
    r.value = lifted_size(q, n, k, delta) +
              grmc_lower_bound(q, k, n - k, delta, 0, k - delta);
    r.note = "lifted MRD + rank-window [0, k-delta] companion";
    return r;
}

BoundRecord bound_new3(uint32_t q, int n, int k, int delta) {
    if (!(n >= 2 * k + delta && k >= 2 * delta && delta > 0))
        throw std::invalid_argument("new-3: need n >= 2k + delta, k >= 2 delta");
    BoundRecord r{"new-3", q, n, k, delta};
    mpz_class m1 = 0;
    for (int i = 0; i < k / delta; ++i)
        m1 += zpow(q, (uint64_t)((n - k) * (k - delta + 1) -
                                 i * delta * delta));
    m1 += zpow(q, (uint64_t)(n - k - delta) * (uint64_t)(k - delta + 1));
    r.value = m1 + grmc_lower_bound(q, k, n - k, delta, 0, k - delta);
    r.note = "pivot-shifted lift ladder + rank-window companion";
    return r;
}

std::vector<mpq_class> stc4_m1_terms(uint32_t q, int n, int k) {
    if (!(n >= 2 * k + 2 && k >= 4))
        throw std::invalid_argument("stc4: need n >= 2k + 2, k >= 4");
    std::vector<mpq_class> terms;
    for (int j = 1; j < (n - 2) / k; ++j) {
        mpq_class t(zpow(q, (uint64_t)(2 * (k - 2))) - 1);
        t *= zpow(q, (uint64_t)(2 * (n - j * k - 1))) - 1;
        mpq_class den((zpow(q, 4) - 1) * (zpow(q, 4) - 1));
        t /= den;
        t *= qpow(q, (long)(k - 3) * (n - j * k - 2) + 4);
        t += qpow(q, (long)(k - 1) * (n - j * k));
        terms.push_back(t);
    }
    return terms;
}

BoundRecord bound_stc4_m1(uint32_t q, int n, int k) {
    BoundRecord r{"stc4-m1", q, n, k, 2};
    mpz_class total = 0;
    int fractional = 0;
    for (const mpq_class& t : stc4_m1_terms(q, n, k)) {
        if (t.get_den() != 1) ++fractional;
        total += floor_q(t);
    }
    r.value = total;
    r.exact = fractional == 0;
    if (fractional)
        r.note = std::to_string(fractional) + " fractional summand(s) floored";
    return r;
}

BoundRecord bound_con4(uint32_t q, int n, int k) {
    BoundRecord m1 = bound_stc4_m1(q, n, k);
    BoundRecord r{"con4", q, n, k, 2};
    r.value = m1.value + grmc_lower_bound(q, k, n - k, 2, 0, k - 4);
    r.exact = m1.exact;
    r.note = m1.note;
    return r;
}

mpq_class M_of_x(uint32_t q, int x) {
    if (x < 12) throw std::invalid_argument("M_of_x: need x >= 12");
    long X = x;
    mpq_class v = qpow(q, 4 * (X - 5));
    if (x % 2 == 0) {
        v += (qpow(q, 2 * X - 10) + qpow(q, 2 * X - 14)) *
             (qpow(q, 2 * X - 14) + (X - 8) / 2 * qpow(q, X - 9));
        v += (qpow(q, 2 * X - 11) + qpow(q, 2 * X - 13)) *
             ((X - 8) / 2 * qpow(q, X - 10) + qpow(q, 2 * X - 15));
        v += (qpow(q, 2 * X - 12) + qpow(q, 2 * X - 13)) *
             (2 * qpow(q, 2 * X - 16) + (X - 10) / 2 * qpow(q, X - 11));
        mpq_class inner = 0;
        long hi1 = std::min(ceil_div_l(q, 2) + 2, floor_div(X - 5, 2));
        for (long i = 3; i <= hi1; ++i)
            inner += i * qpow(q, 2 * X - 2 * i - 12) +
                     ((X - 6) / 2 - i) * qpow(q, X - 2 * i - 7);
        long hi2 = std::min((long)q / 2 + 2, ceil_div_l(X - 7, 2));
        for (long i = 2; i <= hi2; ++i)
            inner += i * qpow(q, 2 * X - 2 * i - 13) +
                     ((X - 6) / 2 - i) * qpow(q, X - 2 * i - 8);
        v += (qpow(q, 2 * X - 12) + qpow(q, 2 * X - 14)) * inner;
    } else {
        v += (qpow(q, 2 * X - 10) + qpow(q, 2 * X - 14)) *
             (qpow(q, 2 * X - 14) + (X - 9) / 2 * qpow(q, X - 8) +
              qpow(q, (X - 9) / 2));
        v += (qpow(q, 2 * X - 11) + qpow(q, 2 * X - 13)) *
             ((X - 9) / 2 * qpow(q, X - 9) + qpow(q, 2 * X - 15) +
              qpow(q, X - 8));
        v += (qpow(q, 2 * X - 12) + qpow(q, 2 * X - 13)) *
             (qpow(q, 2 * X - 16) + (X - 11) / 2 * qpow(q, X - 10) +
              qpow(q, (X - 11) / 2));
        mpq_class inner = 0;
        long hi1 = std::min(ceil_div_l(q, 2) + 2, floor_div(X - 5, 2));
        for (long i = 3; i <= hi1; ++i)
            inner += i * qpow(q, 2 * X - 2 * i - 12) +
                     ((X - 7) / 2 - i) * qpow(q, X - 2 * i - 6) +
                     qpow(q, (X - 7) / 2 - i);
        long hi2 = std::min((long)q / 2 + 2, ceil_div_l(X - 7, 2));
        for (long i = 2; i <= hi2; ++i)
            inner += i * qpow(q, 2 * X - 2 * i - 13) +
                     ((X - 7) / 2 - i) * qpow(q, X - 2 * i - 7) +
                     qpow(q, X - i - 7);
        v += (qpow(q, 2 * X - 12) + qpow(q, 2 * X - 14)) * inner;
    }
    return v;
}

BoundRecord bound_cdc45(uint32_t q, int n) {
    if (n < 12) throw std::invalid_argument("cdc45: need n >= 12");
    mpq_class total = 0;
    for (int j = 0; j <= (n - 12) / 5; ++j) total += M_of_x(q, n - 5 * j);
    total += zpow(q, 4) + zpow(q, 3) + zpow(q, 2) + q + 1;
    if (total.get_den() != 1)
        throw std::logic_error("cdc45: total unexpectedly fractional");
    BoundRecord r{"cdc45", q, n, 5, 2};
    r.value = total.get_num();
    r.note = "five-column recursion down from n to 12..16";
    return r;
}

std::pair<long, long> l1_l2(int n, int k, int delta) {
    long l1;
    if (n >= k + 3 * delta)
        l1 = (long)(k - delta) * delta + n - k - delta;
    else
        l1 = (long)delta * (n - 4 * delta + 2);
    long l2 = 0;
    for (int j = 1; j < delta; ++j)
        l2 = std::max(l2, (long)std::min((delta - j + 1) * (k - delta),
                                         (j + 1) * (n - k - delta)));
    return {l1, l2};
}

BoundRecord bound_construction_new(uint32_t q, int n, int k, int delta) {
    if (!(n >= 2 * k && k >= 2 * delta && delta > 0))
        throw std::invalid_argument(
            "construction-new: need n >= 2k, k >= 2 delta");
    auto [l1, l2] = l1_l2(n, k, delta);
    BoundRecord r{"construction-new", q, n, k, delta};
    r.value = lifted_size(q, n, k, delta) +
              grmc_lower_bound(q, k, n - k, delta, 0, k - delta) +
              zpow(q, (uint64_t)std::max(l1, l2)) +
              zpow(q, (uint64_t)(n - k - delta) * (uint64_t)(k - 2 * delta + 1));
    r.note = "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2);
    return r;
}

BoundRecord bound_cor2(uint32_t q, int delta) {
    if (delta < 1) throw std::invalid_argument("cor2: need delta >= 1");
    int l = delta == 1 ? 2 : (delta / 2 + 1) * delta;
    BoundRecord r{"cor2", q, 4 * delta, 2 * delta, delta};
    r.value = zpow(q, (uint64_t)2 * delta * (delta + 1)) +
              (zpow(q, (uint64_t)2 * delta) - 1) *
                  gaussian_coefficient(q, 2 * delta, delta) +
              zpow(q, (uint64_t)l) + zpow(q, (uint64_t)delta) + 1;
    r.note = "closed form of construction-new at n = 4 delta, k = 2 delta";
    return r;
}

BoundRecord bound_upper_lifted(uint32_t q, int n, int k, int delta,
                               std::optional<mpz_class> aq) {
    if (delta < 1 || k < delta)
        throw std::invalid_argument("upper: need delta >= 1, k >= delta");
    BoundRecord r{"upper", q, n, k, delta};
    mpz_class base = lifted_size(q, n, k, delta);
    if (k < 2 * delta) {
        if (n >= 3 * delta) {
            if (!aq)
                throw MissingDataError(
                    "upper: A_q(n-k, 2(2 delta - k), delta) term required; "
                    "pass --aq-term");
            r.value = base + *aq;
            r.note = "lifted + complementary-block code of the given size";
        } else {
            r.value = base + 1;
            r.note = "lifted + 1 (complementary block too short)";
        }
        return r;
    }
    if (!(k < 3 * delta))
        throw std::invalid_argument("upper: need k < 3 delta");
    if (!aq) {
        if (!(n == 2 * k && k == 2 * delta))
            throw MissingDataError(
                "upper: A_q term defaults to 1 only when n = 2k = 4 delta; "
                "pass --aq-term");
        aq = 1;
    }
    mpz_class extra = zpow(q, (uint64_t)(k - 2 * delta + 1) *
                                  (uint64_t)(n - k - delta)) *
                      gaussian_coefficient(q, n - k, delta) *
                      gaussian_coefficient(q, k, 2 * delta - 1);
    mpz_class den = gaussian_coefficient(q, k - delta, delta - 1);
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), extra.get_mpz_t(),
                den.get_mpz_t());
    if (rem != 0) throw std::logic_error("upper: inexact division");
    r.value = base + *aq + quot;
    return r;
}

mpq_class ratio_4delta(uint32_t q, int delta) {
    mpz_class lo = bound_cor2(q, delta).value;
    mpz_class hi = bound_upper_lifted(q, 4 * delta, 2 * delta, delta).value;
    mpq_class r(lo, hi);
    r.canonicalize();
    return r;
}

std::vector<RatioRow> ratio_table(uint32_t q, int delta_max) {
    std::vector<RatioRow> rows;
    for (int d = 1; d <= delta_max; ++d) {
        RatioRow row;
        row.delta = d;
        row.lower = bound_cor2(q, d).value;
        row.upper = bound_upper_lifted(q, 4 * d, 2 * d, d).value;
        row.ratio = mpq_class(row.lower, row.upper);
        row.ratio.canonicalize();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BoundRecord> table_generate(int table_id) {
    std::vector<BoundRecord> out;
    static const uint32_t qs_no2[] = {3, 4, 5, 7, 8, 9};
    static const uint32_t qs_all[] = {2, 3, 4, 5, 7, 8, 9};
    switch (table_id) {
        case 1: {
            static const int rows[][3] = {{15, 6, 6}, {16, 6, 6}, {17, 6, 6},
                                          {17, 6, 7}, {18, 6, 7}, {19, 6, 7}};
            for (auto [n, d, k] : rows)
                for (uint32_t q : qs_no2)
                    out.push_back(bound_new3(q, n, k, d / 2));
            break;
        }
        case 2: {
            static const int rows[][3] = {{13, 4, 5}, {14, 4, 5}};
            for (auto [n, d, k] : rows) {
                for (uint32_t q : qs_no2) {
                    out.push_back(bound_cdc45(q, n));
                    out.push_back(bound_con4(q, n, k));
                    out.push_back(bound_new3(q, n, k, d / 2));
                }
            }
            break;
        }
        case 3: {
            static const int rows[][3] = {{12, 6, 6}, {14, 6, 7}, {16, 8, 8},
                                          {16, 6, 8}, {18, 8, 9}, {18, 6, 9}};
            for (auto [n, d, k] : rows)
                for (uint32_t q : qs_all)
                    out.push_back(bound_construction_new(q, n, k, d / 2));
            break;
        }
        default:
            throw std::invalid_argument("table_generate: table must be 1..3");
    }
    return out;
}

}  // namespace cdc

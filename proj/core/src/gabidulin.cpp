#include "cdc/gabidulin.hpp"

#include <stdexcept>

#include "cdc/gaussian.hpp"

namespace cdc {

std::vector<ExtField::Elem> GabidulinCode::codeword(
    const std::vector<ExtField::Elem>& msg) const {
    const ExtField& f = *field;
    std::vector<ExtField::Elem> w(n, 0);
    for (int t = 0; t < dim; ++t) {
        if (msg[t] == 0) continue;
        for (int j = 0; j < n; ++j)
            w[j] = f.add(w[j], f.mul(msg[t], gen[t][j]));
    }
    return w;
}

GabidulinCode make_gabidulin(const ExtField& f, int n, int delta) {
    if (delta < 1 || delta > n || n > (int)f.m())
        throw std::invalid_argument("make_gabidulin: need 1 <= delta <= n <= m");
    GabidulinCode c;
    c.field = &f;
    c.n = n;
    c.delta = delta;
    c.dim = n - delta + 1;
    c.gen.resize(c.dim);
    // Row i holds the i-th Frobenius power of (1, y, y^2, ..., y^{n-1}).
    std::vector<ExtField::Elem> g(n);
    for (int j = 0; j < n; ++j) g[j] = f.pow(f.gen(), (uint64_t)j);
    for (int i = 0; i < c.dim; ++i) {
        c.gen[i].resize(n);
        for (int j = 0; j < n; ++j) c.gen[i][j] = f.frobenius(g[j], (uint32_t)i);
    }
    return c;
}

MrdCode::MrdCode(uint32_t q, int rows, int cols, int delta)
    : rows_(rows), cols_(cols), delta_(delta) {
    if (rows < 1 || cols < 1 || delta < 1 || delta > std::min(rows, cols))
        throw std::invalid_argument("MrdCode: bad shape");
    transposed_ = rows < cols;
    int m = std::max(rows, cols), n = std::min(rows, cols);
    base_ = std::make_unique<GF>(q);
    field_ = std::make_unique<ExtField>(*base_, (uint32_t)m);
    gab_ = make_gabidulin(*field_, n, delta);
}

mpz_class MrdCode::size() const {
    return zpow(q(), (uint64_t)field_->m() * (uint64_t)gab_.dim);
}

bool MrdCode::enumerable() const { return size() <= kEnumCap; }

uint64_t MrdCode::size_u64() const {
    mpz_class s = size();
    if (!s.fits_ulong_p())
        throw std::range_error("MrdCode: size exceeds 64 bits");
    return mpz_get_ui(s.get_mpz_t());
}

Mat MrdCode::word(uint64_t idx) const {
    // Decode the message digits base q^m, most significant digit first.
    uint64_t Q = field_->size();
    std::vector<ExtField::Elem> msg(gab_.dim);
    for (int t = gab_.dim; t-- > 0;) {
        msg[t] = idx % Q;
        idx /= Q;
    }
    Mat a = expand_to_matrix(*field_, gab_.codeword(msg));
    return transposed_ ? a.transposed() : a;
}

std::vector<Mat> MrdCode::span_basis() const {
    const ExtField& f = *field_;
    std::vector<Mat> basis;
    basis.reserve((size_t)f.m() * gab_.dim);
    for (int t = 0; t < gab_.dim; ++t) {
        ExtField::Elem scale = 1;
        for (uint32_t s = 0; s < f.m(); ++s) {
            std::vector<ExtField::Elem> w(gab_.n);
            for (int j = 0; j < gab_.n; ++j) w[j] = f.mul(scale, gab_.gen[t][j]);
            Mat a = expand_to_matrix(f, w);
            basis.push_back(transposed_ ? a.transposed() : a);
            scale = f.mul(scale, f.gen());
        }
    }
    return basis;
}

std::map<int, mpz_class> rank_distribution(uint32_t q, int m, int n,
                                           int delta) {
    if (m < n) std::swap(m, n);
    if (delta < 1 || delta > n)
        throw std::invalid_argument("rank_distribution: bad delta");
    std::map<int, mpz_class> dist;
    dist[0] = 1;
    for (int r = delta; r <= n; ++r) {
        int i = r - delta;
        mpz_class sum = 0;
        for (int j = 0; j <= i; ++j) {
            long pairs = (long)(i - j) * (i - j - 1) / 2;  // 0 when i == j
            mpz_class term = gaussian_coefficient(q, r, i - j) *
                             zpow(q, (uint64_t)pairs) *
                             (zpow(q, (uint64_t)m * (j + 1)) - 1);
            if ((i - j) % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        dist[r] = gaussian_coefficient(q, n, r) * sum;
    }
    return dist;
}

std::map<int, uint64_t> rank_histogram(const MrdCode& code) {
    if (!code.enumerable())
        throw std::range_error("rank_histogram: code too large to enumerate");
    uint64_t total = code.size_u64();
    std::map<int, uint64_t> hist;
    for (uint64_t idx = 0; idx < total; ++idx) ++hist[code.word(idx).rank()];
    return hist;
}

}  // namespace cdc

#include "siegel2/qseries.hpp"

#include <algorithm>

namespace siegel2 {

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(prec(), o.prec()));
    for (int n = 0; n < r.prec(); ++n) r[n] = c_[static_cast<std::size_t>(n)] + o[n];
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r(std::min(prec(), o.prec()));
    for (int n = 0; n < r.prec(); ++n) r[n] = c_[static_cast<std::size_t>(n)] - o[n];
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(std::min(prec(), o.prec()));
    for (int i = 0; i < prec() && i < r.prec(); ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j < r.prec() && j < o.prec(); ++j)
            r[i + j] += c_[static_cast<std::size_t>(i)] * o[j];
    }
    return r;
}

QSeries QSeries::operator*(const mpq_class& s) const {
    QSeries r(prec());
    for (int n = 0; n < prec(); ++n) r[n] = c_[static_cast<std::size_t>(n)] * s;
    return r;
}

QSeries QSeries::dilate(int d) const {
    QSeries r(prec());
    for (int n = 0; n * d < prec(); ++n) r[n * d] = c_[static_cast<std::size_t>(n)];
    return r;
}

QSeries QSeries::shift(int e) const {
    QSeries r(prec());
    for (int n = 0; n + e < prec(); ++n) r[n + e] = c_[static_cast<std::size_t>(n)];
    return r;
}

QSeries QSeries::pow(int e) const {
    QSeries r(prec());
    r[0] = 1;
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

bool QSeries::is_zero(int upto) const {
    for (int n = 0; n < upto && n < prec(); ++n)
        if (c_[static_cast<std::size_t>(n)] != 0) return false;
    return true;
}

namespace {

QSeries eisenstein(int prec, int power, long scale) {
    QSeries r(prec);
    r[0] = 1;
    std::vector<mpz_class> sigma(static_cast<std::size_t>(prec));
    for (int d = 1; d < prec; ++d) {
        mpz_class dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(power));
        for (int n = d; n < prec; n += d) sigma[static_cast<std::size_t>(n)] += dp;
    }
    for (int n = 1; n < prec; ++n) r[n] = mpq_class(scale * sigma[static_cast<std::size_t>(n)]);
    return r;
}

} // namespace

QSeries eisenstein_e2(int prec) { return eisenstein(prec, 1, -24); }
QSeries eisenstein_e4(int prec) { return eisenstein(prec, 3, 240); }
QSeries eisenstein_e6(int prec) { return eisenstein(prec, 5, -504); }

QSeries euler_product(int prec) {
    QSeries r(prec);
    r[0] = 1;
    for (int j = 1;; ++j) {
        long g1 = static_cast<long>(j) * (3 * j - 1) / 2;
        long g2 = static_cast<long>(j) * (3 * j + 1) / 2;
        if (g1 >= prec) break;
        int sign = (j % 2 == 0) ? 1 : -1;
        r[static_cast<int>(g1)] = sign;
        if (g2 < prec) r[static_cast<int>(g2)] = sign;
    }
    return r;
}

QSeries eta_product(const std::vector<std::pair<int, int>>& factors, int prec) {
    long weight24 = 0;
    for (auto [d, e] : factors) weight24 += static_cast<long>(d) * e;
    if (weight24 < 0 || weight24 % 24 != 0)
        throw std::invalid_argument("eta product exponent is not an integer power of q");
    QSeries r(prec);
    r[0] = 1;
    QSeries euler = euler_product(prec);
    for (auto [d, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative eta exponents are not supported");
        r = r * euler.dilate(d).pow(e);
    }
    return r.shift(static_cast<int>(weight24 / 24));
}

} // namespace siegel2

#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <utility>
#include <vector>

namespace siegel2 {

// Truncated formal power series in q with exact rational coefficients.
// All arithmetic truncates to the smaller precision of the operands.
class QSeries {
public:
    explicit QSeries(int prec) : c_(static_cast<std::size_t>(prec)) {
        if (prec <= 0) throw std::invalid_argument("QSeries precision must be positive");
    }

    int prec() const { return static_cast<int>(c_.size()); }
    const mpq_class& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    mpq_class& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const mpq_class& s) const;

    // Substitute q -> q^d.
    QSeries dilate(int d) const;
    // Multiply by q^e (e >= 0).
    QSeries shift(int e) const;
    QSeries pow(int e) const;

    bool is_zero(int upto) const;

private:
    std::vector<mpq_class> c_;
};

// Normalized Eisenstein series E_2, E_4, E_6 (constant term 1).
QSeries eisenstein_e2(int prec);
QSeries eisenstein_e4(int prec);
QSeries eisenstein_e6(int prec);

// Euler product prod_{n>=1} (1 - q^n), via the pentagonal number theorem.
QSeries euler_product(int prec);

// prod_d eta(d z)^{e_d} for factors (d, e_d); the total eta exponent weight
// sum d*e_d must be divisible by 24 so the result is a series in integer
// powers of q.
QSeries eta_product(const std::vector<std::pair<int, int>>& factors, int prec);

} // namespace siegel2

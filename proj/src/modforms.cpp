#include "siegel2/modforms.hpp"

#include <algorithm>
#include <cassert>

namespace siegel2 {

namespace {

void require_weight(int k) {
    if (k < 4 || k % 2 != 0)
        throw modforms_error(modforms_error::kind::UnsupportedWeight,
                             "only even weights >= 4 are supported");
}

void require_level(int level) {
    if (level != 1 && level != 2 && level != 4)
        throw modforms_error(modforms_error::kind::UnsupportedLevel,
                             "only levels 1, 2, 4 are supported");
}

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        mpq_class inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            mpq_class f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

QSeries level2_weight2(int prec) {
    // 2 E_2(2z) - E_2(z), a holomorphic weight-2 form on Gamma_0(2).
    QSeries e2 = eisenstein_e2(prec);
    return e2.dilate(2) * mpq_class(2) - e2;
}

QSeries level4_weight2(int prec) {
    // 2 E_2(4z) - E_2(2z), holomorphic of weight 2 on Gamma_0(4).
    QSeries e2 = eisenstein_e2(prec);
    return e2.dilate(4) * mpq_class(2) - e2.dilate(2);
}

} // namespace

int dim_cusp(int level, int k) {
    require_level(level);
    require_weight(k);
    if (level == 1) {
        if (k < 12) return 0;
        return k / 12 - (k % 12 == 2 ? 1 : 0);
    }
    if (level == 2) return std::max(0, k / 4 - 1);
    return std::max(0, k / 2 - 2);
}

int dim_cusp_new(int level, int k) {
    if (level == 1) return dim_cusp(1, k);
    if (level == 2) return dim_cusp(2, k) - 2 * dim_cusp(1, k);
    require_level(level);
    return dim_cusp(4, k) - 2 * dim_cusp(2, k) + dim_cusp(1, k);
}

CuspSpace cusp_space(int level, int k, int prec) {
    require_level(level);
    require_weight(k);
    int dim = dim_cusp(level, k);

    std::vector<QSeries> gens;
    if (level == 1 && k >= 12) {
        QSeries delta = eta_product({{1, 24}}, prec);
        QSeries e4 = eisenstein_e4(prec), e6 = eisenstein_e6(prec);
        for (int a = 0; 4 * a <= k - 12; ++a)
            if ((k - 12 - 4 * a) % 6 == 0)
                gens.push_back(delta * e4.pow(a) * e6.pow((k - 12 - 4 * a) / 6));
    } else if (level == 2 && k >= 8) {
        QSeries e8 = eta_product({{1, 8}, {2, 8}}, prec);
        QSeries w2 = level2_weight2(prec), e4 = eisenstein_e4(prec);
        for (int b = 0; 4 * b <= k - 8; ++b)
            gens.push_back(e8 * w2.pow((k - 8 - 4 * b) / 2) * e4.pow(b));
    } else if (level == 4 && k >= 6) {
        QSeries e12 = eta_product({{2, 12}}, prec);
        QSeries a = level2_weight2(prec), b = level4_weight2(prec);
        for (int i = 0; 2 * i <= k - 6; ++i)
            gens.push_back(e12 * a.pow(i) * b.pow((k - 6) / 2 - i));
    }

    // Echelonize over the q^1..q^(prec-1) coefficient columns.
    QMat rows;
    for (const auto& g : gens) {
        std::vector<mpq_class> row(static_cast<std::size_t>(prec - 1));
        for (int n = 1; n < prec; ++n) row[static_cast<std::size_t>(n - 1)] = g[n];
        rows.push_back(std::move(row));
    }
    std::vector<int> pivot_cols = rref(rows);
    if (static_cast<int>(rows.size()) != dim)
        throw modforms_error(modforms_error::kind::SpanDeficient,
                             "cusp form generators do not span the expected dimension");

    CuspSpace space;
    space.level = level;
    space.k = k;
    space.prec = prec;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        QSeries f(prec);
        for (int n = 1; n < prec; ++n) f[n] = rows[i][static_cast<std::size_t>(n - 1)];
        space.basis.push_back(std::move(f));
        space.pivots.push_back(pivot_cols[i] + 1);
    }
    return space;
}

namespace {

// Expresses g in the echelon basis of the space; verifies the expansion
// matches g through q^upto.
std::vector<mpq_class> coordinates(const CuspSpace& space, const QSeries& g, int upto) {
    std::size_t dim = space.basis.size();
    std::vector<mpq_class> c(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if (space.pivots[j] > upto)
            throw modforms_error(modforms_error::kind::SolveFailed,
                                 "insufficient q-expansion precision for a pivot");
        c[j] = g[space.pivots[j]];
    }
    for (int n = 1; n <= upto; ++n) {
        mpq_class acc = g[n];
        for (std::size_t j = 0; j < dim; ++j) acc -= c[j] * space.basis[j][n];
        if (acc != 0)
            throw modforms_error(modforms_error::kind::SolveFailed,
                                 "operator image lies outside the cusp space");
    }
    return c;
}

} // namespace

QMat hecke_matrix(const CuspSpace& space, long p) {
    std::size_t dim = space.basis.size();
    int upto = (space.prec - 1) / static_cast<int>(p);
    mpz_class pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(space.k - 1));
    QMat m(dim, std::vector<mpq_class>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        QSeries g(upto + 1);
        for (int n = 1; n <= upto; ++n) {
            g[n] = space.basis[j][n * static_cast<int>(p)];
            if (n % p == 0) g[n] += mpq_class(pk1) * space.basis[j][n / static_cast<int>(p)];
        }
        std::vector<mpq_class> c = coordinates(space, g, upto);
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = c[i];
    }
    return m;
}

QMat u2_matrix(const CuspSpace& space) {
    std::size_t dim = space.basis.size();
    int upto = (space.prec - 1) / 2;
    QMat m(dim, std::vector<mpq_class>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        QSeries g(upto + 1);
        for (int n = 1; n <= upto; ++n) g[n] = space.basis[j][2 * n];
        std::vector<mpq_class> c = coordinates(space, g, upto);
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = c[i];
    }
    return m;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, std::vector<mpq_class>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

QMat mat_add(const QMat& a, const QMat& b) {
    QMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

QMat mat_scale(const QMat& a, const mpq_class& s) {
    QMat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

QMat mat_identity(int n) {
    QMat r(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return r;
}

mpq_class mat_trace(const QMat& a) {
    mpq_class t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

QMat mat_kernel(const QMat& a) {
    std::size_t n = a.size();
    QMat m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    QMat kernel;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < m.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m[r][free];
        kernel.push_back(std::move(v));
    }
    rref(kernel);
    return kernel;
}

const CuspSpace& EllipticTraces::space(int level, int k) {
    auto key = std::make_pair(level, k);
    auto it = spaces_.find(key);
    if (it == spaces_.end()) {
        int prec = 20 * (dim_cusp(level, k) + 2);
        it = spaces_.emplace(key, cusp_space(level, k, prec)).first;
    }
    return it->second;
}

const QMat& EllipticTraces::hecke(int level, int k, long p) {
    auto key = std::make_tuple(level, k, p);
    auto it = hecke_.find(key);
    if (it == hecke_.end())
        it = hecke_.emplace(key, hecke_matrix(space(level, k), p)).first;
    return it->second;
}

namespace {

// Solves R * K = S for R, where K has independent rows in reduced echelon
// form; verifies the product exactly.
QMat restrict_rows(const QMat& k_rows, const QMat& s_rows) {
    std::size_t d = k_rows.size();
    std::size_t cols = d == 0 ? 0 : k_rows[0].size();
    std::vector<int> pivots;
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t j = 0;
        while (j < cols && k_rows[i][j] == 0) ++j;
        if (j == cols || k_rows[i][j] != 1)
            throw modforms_error(modforms_error::kind::SolveFailed,
                                 "subspace basis is not in reduced echelon form");
        pivots.push_back(static_cast<int>(j));
    }
    QMat r(d, std::vector<mpq_class>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            r[i][j] = s_rows[i][static_cast<std::size_t>(pivots[j])];
    if (mat_mul(r, k_rows) != s_rows)
        throw modforms_error(modforms_error::kind::SolveFailed,
                             "operator does not preserve the subspace");
    return r;
}

// Image rows of a row-spanned subspace under the coordinate operator M:
// row v maps to v * M^T.
QMat apply_operator(const QMat& rows, const QMat& m) {
    std::size_t d = rows.size();
    std::size_t n = m.size();
    QMat out(d, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) out[i][j] += rows[i][t] * m[j][t];
    return out;
}

} // namespace

EllipticTraces::Level2Data& EllipticTraces::level2(int k) {
    auto it = level2_.find(k);
    if (it != level2_.end()) return it->second;

    Level2Data data;
    data.space = space(2, k);
    QMat u2 = u2_matrix(data.space);
    mpz_class two_k2;
    mpz_ui_pow_ui(two_k2.get_mpz_t(), 2, static_cast<unsigned long>(k - 2));
    QMat c = mat_add(mat_mul(u2, u2),
                     mat_scale(mat_identity(static_cast<int>(u2.size())), -mpq_class(two_k2)));
    data.new_basis = mat_kernel(c);
    if (static_cast<int>(data.new_basis.size()) != dim_cusp_new(2, k))
        throw modforms_error(modforms_error::kind::SpanDeficient,
                             "new subspace has unexpected dimension");

    if (!data.new_basis.empty()) {
        QMat u2_res = restrict_rows(data.new_basis, apply_operator(data.new_basis, u2));
        mpz_class two_h;
        mpz_ui_pow_ui(two_h.get_mpz_t(), 2, static_cast<unsigned long>(k / 2 - 1));
        data.w2_restricted = mat_scale(u2_res, -mpq_class(1, two_h));
        // An involution on newforms.
        QMat sq = mat_mul(data.w2_restricted, data.w2_restricted);
        if (sq != mat_identity(static_cast<int>(data.new_basis.size())))
            throw modforms_error(modforms_error::kind::SolveFailed,
                                 "Fricke involution does not square to the identity");
    }
    return level2_.emplace(k, std::move(data)).first->second;
}

QMat EllipticTraces::hecke_level2_new(int k, long p) {
    Level2Data& data = level2(k);
    return restrict_rows(data.new_basis,
                         apply_operator(data.new_basis, hecke(2, k, p)));
}

mpz_class EllipticTraces::frob_trace(const QMat& m, const QMat& post, int k, long p, int r,
                                     TraceStyle style) {
    mpz_class pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k - 1));
    int n = static_cast<int>(m.size());
    QMat prev = mat_identity(n); // B_0
    if (style == TraceStyle::Frobenius) prev = mat_scale(prev, 2);
    QMat cur = m;                              // B_1
    if (r == 0) cur = prev;
    for (int i = 2; i <= r; ++i) {
        QMat next = mat_add(mat_mul(m, cur), mat_scale(prev, -mpq_class(pk1)));
        prev = std::move(cur);
        cur = std::move(next);
    }
    mpq_class t = mat_trace(mat_mul(cur, post));
    t.canonicalize();
    if (t.get_den() != 1)
        throw modforms_error(modforms_error::kind::SolveFailed,
                             "Frobenius trace is not an integer");
    return t.get_num();
}

int EllipticTraces::dim_level2_new_signed(int k, int sign) {
    int d = dim_cusp_new(2, k);
    if (sign == 0) return d;
    if (d == 0) return 0;
    mpq_class tw = mat_trace(level2(k).w2_restricted);
    mpq_class dd = (mpq_class(d) + mpq_class(sign) * tw) / 2;
    dd.canonicalize();
    assert(dd.get_den() == 1);
    return static_cast<int>(dd.get_num().get_si());
}

mpz_class EllipticTraces::trace_level1(int k, long p, int r, TraceStyle style) {
    int d = dim_cusp(1, k);
    if (d == 0) return 0;
    return frob_trace(hecke(1, k, p), mat_identity(d), k, p, r, style);
}

mpz_class EllipticTraces::trace_level2_new(int k, int sign, long p, int r, TraceStyle style) {
    int d = dim_cusp_new(2, k);
    if (d == 0) return 0;
    QMat post = mat_identity(d);
    if (sign != 0) {
        post = mat_scale(mat_add(post, mat_scale(level2(k).w2_restricted, sign)),
                         mpq_class(1, 2));
        if (dim_level2_new_signed(k, sign) == 0) return 0;
    }
    return frob_trace(hecke_level2_new(k, p), post, k, p, r, style);
}

mpz_class EllipticTraces::trace_level4_new(int k, long p, int r, TraceStyle style) {
    if (dim_cusp_new(4, k) == 0) return 0;
    int d4 = dim_cusp(4, k);
    mpz_class full = frob_trace(hecke(4, k, p), mat_identity(d4), k, p, r, style);
    return full - 2 * trace_level2_new(k, 0, p, r, style) - 3 * trace_level1(k, p, r, style);
}

mpz_class EllipticTraces::eigen_ap(int level, int k, int sign, long p) {
    int d = 0;
    if (level == 1) d = dim_cusp(1, k);
    else if (level == 2) d = dim_level2_new_signed(k, sign);
    else d = dim_cusp_new(4, k);
    if (d != 1)
        throw modforms_error(modforms_error::kind::NotDimensionOne,
                             "eigenvalue requested from a space that is not one-dimensional");
    if (level == 1) return trace_level1(k, p, 1);
    if (level == 2) return trace_level2_new(k, sign, p, 1);
    return trace_level4_new(k, p, 1);
}

} // namespace siegel2

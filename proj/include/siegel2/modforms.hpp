#pragma once

#include "siegel2/qseries.hpp"

#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel2 {

class modforms_error : public std::runtime_error {
public:
    enum class kind {
        UnsupportedLevel,
        UnsupportedWeight,
        SpanDeficient,
        SolveFailed,
        NotDimensionOne,
    };

    modforms_error(kind k, const std::string& what)
        : std::runtime_error(what), kind_(k) {}
    kind which() const { return kind_; }

private:
    kind kind_;
};

using QMat = std::vector<std::vector<mpq_class>>;

// Dimension of the cusp space for Gamma_0(level), level in {1, 2, 4},
// even weight k >= 4.
int dim_cusp(int level, int k);
// Dimension of the new subspace at the given level.
int dim_cusp_new(int level, int k);

// Cusp space with an echelonized integer-pivot q-expansion basis.
struct CuspSpace {
    int level = 1;
    int k = 0;
    int prec = 0;
    std::vector<QSeries> basis; // reduced echelon form, unit pivots
    std::vector<int> pivots;    // pivot exponent of q for each basis element
};

// Builds the cusp space from explicit generators (eta products times
// Eisenstein polynomials) and verifies its rank against dim_cusp.
CuspSpace cusp_space(int level, int k, int prec);

// Matrix of T_p (odd prime p) acting on the cusp space basis, columns =
// images of basis vectors.
QMat hecke_matrix(const CuspSpace& space, long p);
// Matrix of U_2 (level 2 and 4 only).
QMat u2_matrix(const CuspSpace& space);

// Exact linear algebra over Q.
QMat mat_mul(const QMat& a, const QMat& b);
QMat mat_add(const QMat& a, const QMat& b);
QMat mat_scale(const QMat& a, const mpq_class& s);
QMat mat_identity(int n);
mpq_class mat_trace(const QMat& a);
// Basis of the kernel of a (rows are kernel vectors).
QMat mat_kernel(const QMat& a);

// Two ways to evaluate a cusp-form motive at q = p^r.  Frobenius is the
// geometric trace (sum over newforms of alpha^r + beta^r, with
// alpha + beta = a(p), alpha * beta = p^(k-1)); Hecke is the trace of the
// Hecke operator T(p^r) (for r = 2 these differ by p^(k-1) per newform).
// They agree for r <= 1.
enum class TraceStyle { Frobenius, Hecke };

// Caches q-expansion bases and Hecke matrices, and answers the trace
// questions the cohomology bookkeeping needs.
class EllipticTraces {
public:
    // Signed dimension of the level-2 new subspace; sign is the eigenvalue
    // (+1/-1) of the Fricke/Atkin-Lehner involution w_2, sign 0 means both.
    int dim_level2_new_signed(int k, int sign);

    mpz_class trace_level1(int k, long p, int r,
                           TraceStyle style = TraceStyle::Frobenius);
    mpz_class trace_level2_new(int k, int sign, long p, int r,
                               TraceStyle style = TraceStyle::Frobenius);
    mpz_class trace_level4_new(int k, long p, int r,
                               TraceStyle style = TraceStyle::Frobenius);

    // a_f(p) of the unique newform in a one-dimensional space; throws
    // NotDimensionOne otherwise.  level in {1, 2, 4}; for level 2 pass the
    // w_2 sign (+1 or -1), for levels 1 and 4 pass sign 0.
    mpz_class eigen_ap(int level, int k, int sign, long p);

private:
    struct Level2Data {
        CuspSpace space;
        QMat new_basis;     // rows span the new subspace (ambient coords)
        QMat w2_restricted; // w_2 on the new subspace
    };

    const CuspSpace& space(int level, int k);
    Level2Data& level2(int k);
    const QMat& hecke(int level, int k, long p);
    // T_p restricted to the level-2 new subspace.
    QMat hecke_level2_new(int k, long p);

    // tr(B_r * post) for the recursion
    // B_r = M * B_{r-1} - p^(k-1) B_{r-2}, B_1 = M, and B_0 = 2I
    // (Frobenius power sums) or I (Hecke operator T(p^r)).
    static mpz_class frob_trace(const QMat& m, const QMat& post, int k, long p, int r,
                                TraceStyle style);

    std::map<std::pair<int, int>, CuspSpace> spaces_;
    std::map<int, Level2Data> level2_;
    std::map<std::tuple<int, int, long>, QMat> hecke_;
};

} // namespace siegel2

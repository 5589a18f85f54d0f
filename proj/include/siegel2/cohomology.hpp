#pragma once

#include "siegel2/assemble.hpp"
#include "siegel2/motive.hpp"

#include <optional>
#include <string>
#include <vector>

namespace siegel2 {

class cohomology_error : public std::runtime_error {
public:
    enum class kind { OddWeight, MissingData, UnknownRow, UnknownCase };
    cohomology_error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    kind which() const { return kind_; }

private:
    kind kind_;
};

// Compactly supported Eisenstein cohomology of the weight-(l, m) local
// system, as a closed formula in elliptic modular symbols.  The total form
// carries plain integer coefficients; the equivariant form carries
// S6-representation coefficients and must dimension-contract to the total.
// Non-regular conventions: the weight-2 dimension is taken as -1 when
// l = m, and the weight-2 motive as -L - 1 when m = 0.
ScalarExpr eisenstein_total(int l, int m);
RepExpr eisenstein_equivariant(int l, int m);

// Expanded endoscopic part of the inner cohomology (strict endoscopy plus
// the trailing halves of the lifts).  Needs Fricke-signed dimensions.
RepExpr endoscopy_expanded(int l, int m, EllipticTraces& et);

// Lift subspace of the Siegel cusp forms as an S6-representation-valued
// motive; for l != m each pair contributes its full motive (leading part
// at L^0, trailing part at L^(m+1)); for l = m the Saito-Kurokawa motive.
RepExpr lift_decomposition(int l, int m, EllipticTraces& et);

// The published Euler characteristic table rows (level-2 moduli space);
// Siegel symbols are carried formally.  gated reports whether the row is
// part of hard acceptance (rows with l = m, and rows the census range
// cannot reach, are informational only).
struct EcRow {
    int l, m;
    ScalarExpr value;
    bool gated;
};
const std::vector<EcRow>& ec_table();
const EcRow& ec_table_row(int l, int m);

// residual = assembled trace minus Eisenstein minus expanded endoscopy,
// contracted at mu (or at the w^n Young invariants).  With the Frobenius
// style it equals minus the Frobenius trace on the mu-part of the Siegel
// cusp-form motive; minus the Hecke-style residual at q = p^2 reproduces
// the published lambda(p^2) eigenvalue convention, which evaluates the
// elliptic symbols as T(p^2)-traces.  The styles agree at prime q.
mpz_class residual_trace_mu(const TraceContext& ctx, const BetaTable& beta,
                            int mu_index, EllipticTraces& et,
                            TraceStyle style = TraceStyle::Frobenius);
mpz_class residual_trace_young(const TraceContext& ctx, const BetaTable& beta,
                               int n, EllipticTraces& et,
                               TraceStyle style = TraceStyle::Frobenius);

// Newton polygon slopes (ascending, with multiplicity) of the degree-4
// spinor characteristic polynomial determined by lambda(p), lambda(p^2).
std::vector<mpq_class> newton_slopes(int l, int m, long p, const mpz_class& lambda_p,
                                     const mpz_class& lambda_p2);

// One row of the eigenvalue congruence table: the Siegel eigenvalue
// lambda(p) of the (l, m) piece (cut out by mu, or by w^1 invariants when
// mu_index is absent) should be congruent to
// p^(k-2) + a(p) + p^(j+k-1) mod ell, with a(p) taken from the stated
// elliptic newform space and (j, k) = (l - m, m + 3).
struct CongruenceCase {
    std::string id;        // e.g. "61"
    long ell;
    int l, m;
    std::optional<int> mu_index; // contraction; w^1 invariants if absent
    int f_level;           // level of the elliptic form
    int f_weight;
    int f_sign;            // Fricke sign for level 2; 0 otherwise
    std::vector<long> primes;
};
const std::vector<CongruenceCase>& congruence_cases();
const CongruenceCase& congruence_case(const std::string& id, std::optional<int> mu_index);

struct CongruenceResult {
    long p;
    mpz_class lambda;
    mpz_class elliptic_side; // p^(k-2) + a(p) + p^(j+k-1)
    bool holds;
};
CongruenceResult congruence_check(const CongruenceCase& c, long p, const mpz_class& lambda,
                                  EllipticTraces& et);

} // namespace siegel2

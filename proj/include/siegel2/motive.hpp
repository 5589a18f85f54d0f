#pragma once

#include "siegel2/modforms.hpp"
#include "siegel2/partition.hpp"

#include <gmpxx.h>
#include <compare>
#include <map>
#include <stdexcept>

namespace siegel2 {

class motive_error : public std::runtime_error {
public:
    enum class kind { SiegelNotEvaluable, OddWeight };
    motive_error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    kind which() const { return kind_; }

private:
    kind kind_;
};

// Frobenius-trace symbols.  Unit is the trivial motive (trace 1); Level1(k)
// is the cusp-form motive of SL(2,Z) weight k; Level2Plus/Minus(k) the
// signed Fricke eigenspaces of the level-2 new subspace; Level4New(k) the
// level-4 new subspace; Siegel(j, k) the vector-valued Siegel cusp-form
// motive, which is carried formally and cannot be evaluated.
enum class SymKind { Unit, Level1, Level2Plus, Level2Minus, Level4New, Siegel };

struct Symbol {
    SymKind kind = SymKind::Unit;
    int k = 0;
    int j = 0;
    auto operator<=>(const Symbol&) const = default;
};

// A term is a symbol times L^e (L = Tate motive, trace q).
using TermKey = std::pair<Symbol, int>;

// Formal sum of terms with S6-representation coefficients.
struct RepExpr {
    std::map<TermKey, RepVec> terms;

    void add(const Symbol& s, int tate_power, const RepVec& coeff, long scale = 1);
    RepExpr& operator+=(const RepExpr& o);
    RepExpr& operator-=(const RepExpr& o);
    void normalize(); // drop zero coefficients
};

// Formal sum of terms with integer coefficients.
struct ScalarExpr {
    std::map<TermKey, mpz_class> terms;

    void add(const Symbol& s, int tate_power, const mpz_class& coeff);
    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    void normalize();
    bool has_siegel() const;
};

// Contractions of representation coefficients to integers.
ScalarExpr contract_dim(const RepExpr& e);
ScalarExpr contract_mu(const RepExpr& e, int mu_index);
// Multiplicity of the trivial representation of S_{6-n} (invariants with n
// marked Weierstrass points).
ScalarExpr contract_young(const RepExpr& e, int n);

// Trace of the expression at q = p^r, evaluating cusp-form symbols per the
// chosen style.  Throws on Siegel symbols with nonzero coefficient.
mpz_class eval_scalar(const ScalarExpr& e, EllipticTraces& et, long p, int r,
                      TraceStyle style = TraceStyle::Frobenius);

// Adds coeff * S[Gamma_0(4), k] (the full cusp space motive: new level 4
// plus two copies of new level 2 plus three copies of level 1).
void add_level4_full(RepExpr& e, int k, int tate_power, const RepVec& coeff);
void add_level4_full(ScalarExpr& e, int k, int tate_power, const mpz_class& coeff);
// Adds coeff * S[Gamma_0(2), k]^new (both Fricke signs).
void add_level2_new(RepExpr& e, int k, int tate_power, const RepVec& coeff);
void add_level2_new(ScalarExpr& e, int k, int tate_power, const mpz_class& coeff);

} // namespace siegel2

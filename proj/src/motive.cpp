#include "siegel2/motive.hpp"

namespace siegel2 {

void RepExpr::add(const Symbol& s, int tate_power, const RepVec& coeff, long scale) {
    terms[{s, tate_power}] += coeff * scale;
}

RepExpr& RepExpr::operator+=(const RepExpr& o) {
    for (const auto& [key, v] : o.terms) terms[key] += v;
    return *this;
}

RepExpr& RepExpr::operator-=(const RepExpr& o) {
    for (const auto& [key, v] : o.terms) terms[key] += v * -1;
    return *this;
}

void RepExpr::normalize() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

void ScalarExpr::add(const Symbol& s, int tate_power, const mpz_class& coeff) {
    terms[{s, tate_power}] += coeff;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    for (const auto& [key, v] : o.terms) terms[key] += v;
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
    for (const auto& [key, v] : o.terms) terms[key] -= v;
    return *this;
}

void ScalarExpr::normalize() {
    for (auto it = terms.begin(); it != terms.end();)
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
}

bool ScalarExpr::has_siegel() const {
    for (const auto& [key, v] : terms)
        if (key.first.kind == SymKind::Siegel && v != 0) return true;
    return false;
}

namespace {

template <typename F>
ScalarExpr contract_with(const RepExpr& e, F&& weight) {
    ScalarExpr out;
    for (const auto& [key, v] : e.terms) {
        mpz_class c = weight(v);
        if (c != 0) out.add(key.first, key.second, c);
    }
    return out;
}

} // namespace

ScalarExpr contract_dim(const RepExpr& e) {
    return contract_with(e, [](const RepVec& v) { return mpz_class(v.dim()); });
}

ScalarExpr contract_mu(const RepExpr& e, int mu_index) {
    const Partition& mu = partitions6()[static_cast<std::size_t>(mu_index)];
    return contract_with(e, [&](const RepVec& v) { return mpz_class(v.mult_of(mu)); });
}

ScalarExpr contract_young(const RepExpr& e, int n) {
    return contract_with(e, [&](const RepVec& v) { return mpz_class(v.young_contract(n)); });
}

mpz_class eval_scalar(const ScalarExpr& e, EllipticTraces& et, long p, int r,
                      TraceStyle style) {
    mpz_class total = 0;
    for (const auto& [key, c] : e.terms) {
        if (c == 0) continue;
        const Symbol& s = key.first;
        mpz_class base;
        switch (s.kind) {
        case SymKind::Unit: base = 1; break;
        case SymKind::Level1: base = et.trace_level1(s.k, p, r, style); break;
        case SymKind::Level2Plus: base = et.trace_level2_new(s.k, +1, p, r, style); break;
        case SymKind::Level2Minus: base = et.trace_level2_new(s.k, -1, p, r, style); break;
        case SymKind::Level4New: base = et.trace_level4_new(s.k, p, r, style); break;
        case SymKind::Siegel:
            throw motive_error(motive_error::kind::SiegelNotEvaluable,
                               "Siegel symbols have no elliptic evaluation");
        }
        mpz_class lpow;
        mpz_ui_pow_ui(lpow.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(r * key.second));
        total += c * base * lpow;
    }
    return total;
}

void add_level4_full(RepExpr& e, int k, int tate_power, const RepVec& coeff) {
    e.add({SymKind::Level4New, k, 0}, tate_power, coeff);
    e.add({SymKind::Level2Plus, k, 0}, tate_power, coeff, 2);
    e.add({SymKind::Level2Minus, k, 0}, tate_power, coeff, 2);
    e.add({SymKind::Level1, k, 0}, tate_power, coeff, 3);
}

void add_level4_full(ScalarExpr& e, int k, int tate_power, const mpz_class& coeff) {
    e.add({SymKind::Level4New, k, 0}, tate_power, coeff);
    e.add({SymKind::Level2Plus, k, 0}, tate_power, 2 * coeff);
    e.add({SymKind::Level2Minus, k, 0}, tate_power, 2 * coeff);
    e.add({SymKind::Level1, k, 0}, tate_power, 3 * coeff);
}

void add_level2_new(RepExpr& e, int k, int tate_power, const RepVec& coeff) {
    e.add({SymKind::Level2Plus, k, 0}, tate_power, coeff);
    e.add({SymKind::Level2Minus, k, 0}, tate_power, coeff);
}

void add_level2_new(ScalarExpr& e, int k, int tate_power, const mpz_class& coeff) {
    e.add({SymKind::Level2Plus, k, 0}, tate_power, coeff);
    e.add({SymKind::Level2Minus, k, 0}, tate_power, coeff);
}

} // namespace siegel2

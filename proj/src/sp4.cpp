#include "siegel2/sp4.hpp"

#include <stdexcept>
#include <vector>

namespace siegel2 {

namespace {

// Let u = x + 1/x, v = y + 1/y.  Writing P_a(u) = (x^a - x^-a)/(x - x^-1)
// (the degree a-1 Chebyshev-like polynomial: P_0 = 0, P_1 = 1,
// P_a = u P_{a-1} - P_{a-2}), the Weyl character formula for Sp(4) gives
//   chi_{l,m}(x,y) = (P_{l+2}(u) P_{m+1}(v) - P_{m+1}(u) P_{l+2}(v)) / (u - v).
// The quotient is a symmetric polynomial in (u, v); rewriting it in
// e1 = u+v, e2 = uv and substituting e1 = p1, e2 = (p1^2 - p2 - 4)/2 yields
// the power-sum expansion.

using Poly1 = std::vector<mpz_class>;  // dense, coeff of u^i at index i

Poly1 cheb(int a) {
  Poly1 p0 = {};          // P_0 = 0
  Poly1 p1 = {1};         // P_1 = 1
  if (a == 0) return p0;
  for (int k = 2; k <= a; ++k) {
    Poly1 next(p1.size() + 1, 0);
    for (size_t i = 0; i < p1.size(); ++i) next[i + 1] = p1[i];  // u * P_{k-1}
    for (size_t i = 0; i < p0.size(); ++i) next[i] -= p0[i];
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

using Key = std::pair<int, int>;

void add_term(std::map<Key, mpz_class>& poly, int i, int j, const mpz_class& c) {
  if (c == 0) return;
  auto it = poly.find({i, j});
  if (it == poly.end()) {
    poly[{i, j}] = c;
  } else {
    it->second += c;
    if (it->second == 0) poly.erase(it);
  }
}

}  // namespace

int64_t sp4_dim(int l, int m) {
  return static_cast<int64_t>(l - m + 1) * (m + 1) * (l + 2) * (l + m + 3) / 6;
}

BetaTable sp4_beta(int l, int m) {
  if (m < 0 || l < m) throw std::invalid_argument("sp4_beta: require l >= m >= 0");
  Poly1 Pl = cheb(l + 2), Pm = cheb(m + 1);

  // Antisymmetric numerator A(u,v) = Pl(u) Pm(v) - Pm(u) Pl(v).
  std::map<Key, mpz_class> A;
  for (size_t i = 0; i < Pl.size(); ++i)
    for (size_t j = 0; j < Pm.size(); ++j) {
      mpz_class c = Pl[i] * Pm[j];
      add_term(A, static_cast<int>(i), static_cast<int>(j), c);
      add_term(A, static_cast<int>(j), static_cast<int>(i), -c);
    }

  // Divide by (u - v): (u^i v^j - u^j v^i)/(u - v) = sum_{t=j..i-1} u^t v^{i+j-1-t}
  // for i > j.  Collect the i > j half of A (coefficient c on u^i v^j implies
  // -c on u^j v^i by antisymmetry).
  std::map<Key, mpz_class> S;  // symmetric quotient in (u, v)
  for (const auto& [key, c] : A) {
    auto [i, j] = key;
    if (i <= j) continue;
    for (int t = j; t <= i - 1; ++t) add_term(S, t, i + j - 1 - t, c);
  }

  // Rewrite the symmetric polynomial S(u,v) in e1 = u+v, e2 = uv by peeling
  // the lex-leading term: c u^a v^b (a >= b) -> c e1^{a-b} e2^b.
  std::map<Key, mpz_class> E;  // (e1 exponent, e2 exponent) -> coeff
  while (!S.empty()) {
    // Leading term: maximal (i, j) in lex order among entries with i >= j.
    auto it = S.end();
    --it;
    auto [a, b] = it->first;
    if (a < b) throw std::logic_error("sp4_beta: quotient not symmetric");
    mpz_class c = it->second;
    E[{a - b, b}] += c;
    // Subtract c * e1^{a-b} * e2^b = c * (u+v)^{a-b} * (uv)^b from S.
    mpz_class binom = 1;
    for (int t = 0; t <= a - b; ++t) {
      // term: binom * u^{a-b-t} v^t * u^b v^b
      add_term(S, a - t, b + t, -c * binom);
      binom = binom * (a - b - t) / (t + 1);
    }
  }

  // Substitute e1 = p1, e2 = (p1^2 - p2 - 4)/2.
  BetaTable bt;
  bt.l = l;
  bt.m = m;
  for (const auto& [key, c] : E) {
    auto [a, b] = key;  // c * p1^a * ((p1^2 - p2 - 4)/2)^b
    // Expand ((p1^2 - 4) - p2)^b = sum_k C(b,k) (p1^2-4)^{b-k} (-p2)^k and
    // (p1^2-4)^{b-k} = sum_s C(b-k,s) p1^{2s} (-4)^{b-k-s}.
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, b);
    mpz_class cb = 1;
    for (int k = 0; k <= b; ++k) {
      mpz_class cs = 1;
      for (int s = 0; s <= b - k; ++s) {
        mpz_class pm4;
        mpz_ui_pow_ui(pm4.get_mpz_t(), 4, b - k - s);
        if ((b - k - s) % 2) pm4 = -pm4;
        mpz_class sgn = (k % 2) ? -1 : 1;
        mpq_class coeff(c * cb * cs * pm4 * sgn, denom);
        coeff.canonicalize();
        if (coeff != 0) {
          auto& slot = bt.beta[{a + 2 * s, k}];
          slot += coeff;
          if (slot == 0) bt.beta.erase({a + 2 * s, k});
        }
        cs = cs * (b - k - s) / (s + 1);
      }
      cb = cb * (b - k) / (k + 1);
    }
  }

  // Structural checks: support bound, parity, and dimension at the identity
  // (x = y = 1, i.e. p1 = p2 = 4).
  for (const auto& [key, c] : bt.beta) {
    auto [n1, n2] = key;
    if (n1 + 2 * n2 > l + m || (n1 - (l + m)) % 2 != 0)
      throw std::logic_error("sp4_beta: coefficient outside expected support");
    (void)c;
  }
  if (sp4_eval(bt, 4, 4) != sp4_dim(l, m))
    throw std::logic_error("sp4_beta: dimension check failed");
  return bt;
}

mpq_class sp4_eval(const BetaTable& bt, const mpq_class& p1, const mpq_class& p2) {
  mpq_class total = 0;
  for (const auto& [key, c] : bt.beta) {
    auto [n1, n2] = key;
    mpq_class term = c;
    for (int i = 0; i < n1; ++i) term *= p1;
    for (int i = 0; i < n2; ++i) term *= p2;
    total += term;
  }
  return total;
}

}  // namespace siegel2

#include "siegel2/ffield.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace siegel2 {

namespace {

// Polynomials over F_p as int vectors (coeff of x^i at index i), plain
// integer arithmetic mod p.  Used only during table construction.
using ZPoly = std::vector<int>;

ZPoly zp_trim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zp_mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& mod, int p) {
  ZPoly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce mod the monic polynomial `mod` of degree n
  int n = static_cast<int>(mod.size()) - 1;
  for (int d = static_cast<int>(r.size()) - 1; d >= n; --d) {
    int c = r[d];
    if (!c) continue;
    r[d] = 0;
    for (int i = 0; i < n; ++i) r[d - n + i] = ((r[d - n + i] - c * mod[i]) % p + p) % p;
  }
  r.resize(n);
  return r;
}

bool zp_has_root(const ZPoly& f, int p) {
  for (int x = 0; x < p; ++x) {
    int64_t v = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

// Trial-divide monic f by monic g over F_p; true if divisible.
bool zp_divisible(ZPoly f, const ZPoly& g, int p) {
  int dg = static_cast<int>(g.size()) - 1;
  for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
    int c = f[d];
    if (!c) continue;
    for (int i = 0; i <= dg; ++i) f[d - dg + i] = ((f[d - dg + i] - c * g[i]) % p + p) % p;
  }
  return zp_trim(f).empty();
}

bool zp_irreducible(const ZPoly& f, int p) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return n == 1;
  if (zp_has_root(f, p)) return false;
  if (n <= 3) return true;  // degree 2,3: no roots suffices
  // degree 4: also exclude irreducible quadratic factors
  for (int b = 0; b < p; ++b)
    for (int c = 0; c < p; ++c) {
      ZPoly g = {c, b, 1};
      if (zp_has_root(g, p)) continue;
      if (zp_divisible(f, g, p)) return false;
    }
  return true;
}

}  // namespace

Field Field::make(int p, int n, int q_cap) {
  if (p < 3 || p % 2 == 0) throw field_error("EvenCharacteristic", "p must be an odd prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw field_error("NotPrime", "p = " + std::to_string(p));
  if (n < 1 || n > 4) throw field_error("DegreeOutOfRange", "n = " + std::to_string(n));
  int64_t q64 = 1;
  for (int i = 0; i < n; ++i) q64 *= p;
  if (q64 > q_cap) throw field_error("FieldTooLarge", "q = " + std::to_string(q64));
  Field F;
  F.p = p;
  F.n = n;
  F.q = static_cast<int>(q64);

  // Lexicographically smallest monic irreducible modulus.
  ZPoly mod;
  for (int64_t code = 0;; ++code) {
    ZPoly f(n + 1, 0);
    f[n] = 1;
    int64_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (n == 1 || zp_irreducible(f, p)) {
      mod = f;
      break;
    }
  }
  F.modulus = mod;

  // Enumerate field elements as F_p-polynomials of degree < n; element code
  // is the base-p integer with c_0 least significant.
  const int q = F.q;
  auto code_of = [&](const ZPoly& a) {
    int64_t s = 0;
    for (int i = n - 1; i >= 0; --i) s = s * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return static_cast<int>(s);
  };

  // Find a multiplicative generator: smallest polynomial code whose order is q-1.
  std::vector<int64_t> prime_factors;
  {
    int64_t m = q - 1;
    for (int64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) prime_factors.push_back(m);
  }
  auto pow_poly = [&](ZPoly base, int64_t e) {
    ZPoly r(n, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = zp_mulmod(r, base, mod, p);
      base = zp_mulmod(base, base, mod, p);
      e >>= 1;
    }
    return r;
  };
  ZPoly gen;
  for (int code = 2; code < q; ++code) {
    ZPoly a(n, 0);
    int c = code;
    for (int i = 0; i < n; ++i) {
      a[i] = c % p;
      c /= p;
    }
    if (zp_trim(a).empty()) continue;
    bool isgen = true;
    for (int64_t f : prime_factors) {
      ZPoly t = pow_poly(a, (q - 1) / f);
      if (t[0] == 1 && zp_trim(ZPoly(t.begin() + 1, t.end())).empty()) {
        isgen = false;
        break;
      }
    }
    if (isgen) {
      gen = a;
      break;
    }
  }
  if (gen.empty()) throw field_error("InternalError", "no generator found");

  // exp table: codes of g^0 .. g^{q-2}; log: code -> element index.
  std::vector<int> exp_code(q - 1);
  std::vector<int> idx_of_code(q, 0);
  {
    ZPoly cur(n, 0);
    cur[0] = 1;
    for (int e = 0; e < q - 1; ++e) {
      exp_code[e] = code_of(cur);
      idx_of_code[exp_code[e]] = e + 1;
      cur = zp_mulmod(cur, gen, mod, p);
    }
  }

  // Addition table via polynomial addition of codes.
  F.add_tab_.assign(static_cast<size_t>(q) * q, 0);
  F.neg_tab_.assign(q, 0);
  auto poly_of_idx = [&](int k) {
    ZPoly a(n, 0);
    if (k) {
      int c = exp_code[k - 1];
      for (int i = 0; i < n; ++i) {
        a[i] = c % p;
        c /= p;
      }
    }
    return a;
  };
  std::vector<ZPoly> polys(q);
  for (int k = 0; k < q; ++k) polys[k] = poly_of_idx(k);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      ZPoly s(n, 0);
      for (int i = 0; i < n; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
      F.add_tab_[static_cast<size_t>(a) * q + b] = static_cast<int16_t>(idx_of_code[code_of(s)]);
    }
    ZPoly s(n, 0);
    for (int i = 0; i < n; ++i) s[i] = (p - polys[a][i]) % p;
    F.neg_tab_[a] = static_cast<int16_t>(idx_of_code[code_of(s)]);
  }

  // Quadratic character: g^even are the squares (q odd).
  F.chi_tab_.assign(q, 0);
  for (int k = 1; k < q; ++k) F.chi_tab_[k] = ((k - 1) % 2 == 0) ? 1 : -1;
  return F;
}

int Field::from_int(int64_t c) const {
  c %= p;
  if (c < 0) c += p;
  int r = 0;
  for (int i = 0; i < c; ++i) r = add(r, 1);
  return r;
}

int Field::pow(int a, int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  int64_t le = (static_cast<int64_t>(a - 1) * (e % (q - 1))) % (q - 1);
  return static_cast<int>(le) + 1;
}

std::vector<int> Field::embedding_into(const Field& ext) const {
  if (ext.p != p || ext.n % n != 0 || ext.n == n)
    throw field_error("BadExtension", "not a proper extension of matching characteristic");
  // Minimal polynomial of the generator g over F_p.  Since F_q = F_p(g),
  // the powers 1, g, ..., g^{n-1} form an F_p basis; express g^n in that
  // basis by enumerating all p^n linear combinations once.
  const int deg = n;
  std::vector<std::vector<int>> coords(q);  // element -> coordinates in basis g^0..g^{n-1}
  {
    std::vector<int> digits(deg, 0);
    for (int code = 0; code < q; ++code) {
      int c = code;
      for (int i = 0; i < deg; ++i) {
        digits[i] = c % p;
        c /= p;
      }
      int elt = 0;
      for (int i = 0; i < deg; ++i) elt = add(elt, mul(from_int(digits[i]), pow(2, i)));
      coords[elt] = digits;
    }
  }
  // minpoly(x) = x^n - sum_i coords[g^n][i] x^i.
  int gn = pow(2, deg);  // g is element index 2
  std::vector<int> minpoly(deg + 1, 0);
  minpoly[deg] = 1;
  for (int i = 0; i < deg; ++i) minpoly[i] = (p - coords[gn][i]) % p;

  // Find a root of minpoly in ext.
  int root = -1;
  for (int x = 0; x < ext.q; ++x) {
    int v = 0;
    for (int i = deg; i >= 0; --i) v = ext.add(ext.mul(v, x), ext.from_int(minpoly[i]));
    if (v == 0) {
      root = x;
      break;
    }
  }
  if (root < 0) throw field_error("InternalError", "embedding root not found");

  // embed(g^e) = root^e: the map g -> root extends to a field isomorphism
  // onto the subfield since root has the same minimal polynomial as g.
  std::vector<int> tab(q, 0);
  int cur = 1;
  for (int e = 0; e < q - 1; ++e) {
    tab[e + 1] = cur;
    cur = ext.mul(cur, root);
  }
  // Sanity: additive homomorphism on a few pairs.
  for (int a = 0; a < std::min(q, 16); ++a)
    for (int b = 0; b < std::min(q, 16); ++b)
      if (tab[add(a, b)] != ext.add(tab[a], tab[b]))
        throw field_error("InternalError", "embedding is not additive");
  return tab;
}

Field::Poly Field::poly_mod(Poly a, const Poly& b) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
  Poly bb = b;
  while (!bb.empty() && bb.back() == 0) bb.pop_back();
  if (bb.empty()) throw field_error("DivisionByZero", "poly_mod by zero");
  int db = static_cast<int>(bb.size()) - 1;
  int lead_inv = inv(bb[db]);
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    int c = a[d];
    if (!c) continue;
    int f = mul(c, lead_inv);
    for (int i = 0; i <= db; ++i) a[d - db + i] = sub(a[d - db + i], mul(f, bb[i]));
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Field::Poly Field::poly_gcd(Poly a, Poly b) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (!b.empty() && b.back() == 0) b.pop_back();
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // make monic
    int li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
  }
  return a;
}

Field::Poly Field::poly_deriv(const Poly& a) const {
  Poly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], from_int(static_cast<int64_t>(i))));
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

bool Field::poly_squarefree(const Poly& a) const {
  // Zero derivative means f is a p-th power, hence not squarefree.
  Poly d = poly_deriv(a);
  if (d.empty()) return false;
  Poly g = poly_gcd(a, d);
  return g.size() == 1;
}

int Field::poly_eval(const Poly& a, int x) const {
  int v = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = add(mul(v, x), a[i]);
  return v;
}

std::vector<int> Field::factor_degrees(const Poly& a) const {
  Poly f = a;
  while (!f.empty() && f.back() == 0) f.pop_back();
  int deg = static_cast<int>(f.size()) - 1;
  std::vector<int> parts;
  // Distinct-degree factorization: r_i = x^{q^i} mod f; gcd(r_i - x, f)
  // collects all irreducible factors of degree i.
  auto mulmod = [&](const Poly& u, const Poly& v) {
    Poly r(u.size() + v.size(), 0);
    for (size_t i = 0; i < u.size(); ++i)
      if (u[i])
        for (size_t j = 0; j < v.size(); ++j)
          if (v[j]) r[i + j] = add(r[i + j], mul_nz(u[i], v[j]));
    return poly_mod(std::move(r), f);
  };
  // x^q mod f via square-and-multiply on the exponent q.
  Poly x = {0, 1};
  auto powq = [&](Poly base) {
    Poly r = {1};
    int64_t e = q;
    while (e) {
      if (e & 1) r = mulmod(r, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return r;
  };
  Poly r = poly_mod(x, f);  // x mod f
  int i = 0;
  while (deg > 0) {
    ++i;
    if (2 * i > deg) {  // remainder is a single irreducible factor
      parts.push_back(deg);
      break;
    }
    r = powq(r);  // r = x^{q^i} mod f
    // gcd(r - x, f)
    Poly rx = r;
    if (rx.size() < 2) rx.resize(2, 0);
    rx[1] = sub(rx[1], 1);
    Poly g = poly_gcd(rx, f);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int t = 0; t < dg / i; ++t) parts.push_back(i);
      // divide f by g
      Poly quot;
      {
        Poly num = f;
        int db = dg;
        quot.assign(num.size() - db, 0);
        for (int d = static_cast<int>(num.size()) - 1; d >= db; --d) {
          int c = num[d];
          if (!c) continue;
          quot[d - db] = c;
          for (int k = 0; k <= db; ++k) num[d - db + k] = sub(num[d - db + k], mul(c, g[k]));
        }
      }
      f = quot;
      while (!f.empty() && f.back() == 0) f.pop_back();
      deg = static_cast<int>(f.size()) - 1;
      r = poly_mod(r, f);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace siegel2

#pragma once
// Small finite fields F_{p^n} (p odd, n <= 4, q <= a configurable cap) with
// full addition/multiplication lookup tables, the quadratic character, and
// explicit embeddings into quadratic extensions.  Elements are encoded as
// ints: 0 is the zero element, k in 1..q-1 is g^(k-1) for a fixed generator g
// of the multiplicative group.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel2 {

struct field_error : std::runtime_error {
  std::string kind;
  field_error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

class Field {
 public:
  int p = 0, n = 0, q = 0;
  std::vector<int> modulus;  // monic irreducible over F_p, degree n (coeff of x^i at i)

  // Build F_{p^n}.  Deterministic: the modulus is the lexicographically
  // smallest monic irreducible (coefficient tuple (c_{n-1},...,c_0) read as a
  // base-p integer), and g is the smallest-encoded generator.
  static Field make(int p, int n, int q_cap = 1369);

  int add(int a, int b) const { return add_tab_[a * q + b]; }
  int sub(int a, int b) const { return add_tab_[a * q + neg_tab_[b]]; }
  int neg(int a) const { return neg_tab_[a]; }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return mul_nz(a, b);
  }
  // Multiplication of known-nonzero elements.
  int mul_nz(int a, int b) const {
    int e = a - 1 + b - 1;
    if (e >= q - 1) e -= q - 1;
    return e + 1;
  }
  int inv(int a) const {
    if (a == 0) throw field_error("DivisionByZero", "inverse of 0");
    return a == 1 ? 1 : q - a + 1;
  }
  // Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int chi(int a) const { return chi_tab_[a]; }
  int one() const { return 1; }
  // The element of F_p <= F_q corresponding to the integer c (mod p).
  int from_int(int64_t c) const;
  int pow(int a, int64_t e) const;

  const int16_t* add_row(int a) const { return add_tab_.data() + a * q; }
  const int8_t* chi_table() const { return chi_tab_.data(); }

  // Embedding table of this field into ext (requires ext.p == p, n | ext.n):
  // result[k] = image of element k.
  std::vector<int> embedding_into(const Field& ext) const;

  // --- polynomial helpers (dense coefficient vectors, index = degree) ---
  // All arguments/results use this field's element encoding.
  using Poly = std::vector<int>;
  Poly poly_mod(Poly a, const Poly& b) const;
  Poly poly_gcd(Poly a, Poly b) const;
  Poly poly_deriv(const Poly& a) const;
  bool poly_squarefree(const Poly& a) const;
  int poly_eval(const Poly& a, int x) const;
  // Degrees of irreducible factors of a squarefree monic polynomial,
  // returned as a descending partition of deg(a).
  std::vector<int> factor_degrees(const Poly& a) const;

 private:
  std::vector<int16_t> add_tab_;
  std::vector<int16_t> neg_tab_;
  std::vector<int8_t> chi_tab_;
};

}  // namespace siegel2

#pragma once
// Characters of irreducible Sp(4) representations V_{l,m} expanded in the
// power sums p_1 = x + 1/x + y + 1/y and p_2 = x^2 + 1/x^2 + y^2 + 1/y^2 of
// the eigenvalues of a symplectic conjugacy class.  The expansion
//   chi_{l,m} = sum beta_{n1,n2} p_1^{n1} p_2^{n2}
// is unique; coefficients are rational.

#include <cstdint>
#include <map>
#include <utility>

#include <gmpxx.h>

namespace siegel2 {

struct BetaTable {
  int l = 0, m = 0;
  // (n1, n2) -> beta.  Only nonzero entries are stored; all entries satisfy
  // n1 + 2*n2 <= l + m and n1 == l + m (mod 2).
  std::map<std::pair<int, int>, mpq_class> beta;
};

// Weyl-character expansion of V_{l,m} (l >= m >= 0).
BetaTable sp4_beta(int l, int m);

// dim V_{l,m} = (l-m+1)(m+1)(l+2)(l+m+3)/6.
int64_t sp4_dim(int l, int m);

// Evaluate chi_{l,m} at given values of (p1, p2); used for self-checks.
mpq_class sp4_eval(const BetaTable& bt, const mpq_class& p1, const mpq_class& p2);

}  // namespace siegel2

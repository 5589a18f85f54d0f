#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siegel2/sp4.hpp"

using namespace siegel2;
using std::int64_t;

namespace {
// Weyl dimension formula for Sp(4) with highest weight (l >= m >= 0).
int64_t weyl_dim(int l, int m) {
    return static_cast<int64_t>(l - m + 1) * (m + 1) * (l + 2) * (l + m + 3) / 6;
}
}

TEST_CASE("branching coefficients: support, parity, and dimension") {
    for (int l = 0; l <= 20; ++l)
        for (int m = 0; m <= l; ++m) {
            if (l + m > 20) continue;
            BetaTable t = sp4_beta(l, m);
            for (const auto& [key, coeff] : t.beta) {
                auto [n1, n2] = key;
                CHECK(n1 >= 0);
                CHECK(n2 >= 0);
                CHECK(n1 + 2 * n2 <= l + m);
                // The q-power (l + m - n1 - 2 n2)/2 must be integral, so the
                // layer label has the same parity as the weight.
                CHECK((l + m - n1 - 2 * n2) % 2 == 0);
                (void)coeff;
            }
            CHECK(sp4_dim(l, m) == weyl_dim(l, m));
            // Evaluate the symplectic character at the identity element
            // (all eigenvalues 1): every layer contributes its dimension.
            CHECK(sp4_eval(t, 4, 4) == weyl_dim(l, m));
        }
}

TEST_CASE("small tables by hand") {
    // V_{0,0} is trivial: a single constant layer.
    BetaTable t00 = sp4_beta(0, 0);
    REQUIRE(t00.beta.size() == 1);
    CHECK(t00.beta.at({0, 0}) == 1);
    // V_{1,0} is the standard 4-dimensional representation.
    BetaTable t10 = sp4_beta(1, 0);
    REQUIRE(t10.beta.size() == 1);
    CHECK(t10.beta.at({1, 0}) == 1);
    CHECK(sp4_dim(1, 0) == 4);
    // V_{1,1} is the 5-dimensional piece of Lambda^2 of the standard rep.
    CHECK(sp4_dim(1, 1) == 5);
}

TEST_CASE("specialization oracle at sample character values") {
    // sp4_eval(t, p1, p2) specializes the layers at power sums p1 = sum x_i,
    // p2 = sum x_i^2 of the four symplectic eigenvalues {x, 1/x, y, 1/y}.
    // Oracle: the character of V_{l,m} as a symmetric rational function,
    // computed from the Weyl character formula at x = 2, y = 3.
    // chi_{1,0} = x + 1/x + y + 1/y; chi_{1,1} = chi_{Lambda^2} - 1.
    mpq_class x(2), y(3);
    mpq_class p1 = x + 1 / x + y + 1 / y;
    mpq_class p2 = x * x + 1 / (x * x) + y * y + 1 / (y * y);
    CHECK(sp4_eval(sp4_beta(1, 0), p1, p2) == p1);
    // Lambda^2 of the standard rep: e2 = (p1^2 - p2)/2; V_{1,1} = e2 - 1.
    mpq_class e2 = (p1 * p1 - p2) / 2;
    CHECK(sp4_eval(sp4_beta(1, 1), p1, p2) == e2 - 1);
    // Sym^2: h2 = (p1^2 + p2)/2 = V_{2,0}.
    CHECK(sp4_eval(sp4_beta(2, 0), p1, p2) == (p1 * p1 + p2) / 2);
    // Tensor decomposition V_{1,0} x V_{1,0} = V_{2,0} + V_{1,1} + 1.
    CHECK(sp4_eval(sp4_beta(2, 0), p1, p2) + sp4_eval(sp4_beta(1, 1), p1, p2) + 1 ==
          p1 * p1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siegel2/ffield.hpp"

#include <algorithm>
#include <set>

using namespace siegel2;

namespace {
void check_field_axioms(const Field& F) {
    // Exhaustive on small fields: commutativity, associativity samples,
    // distributivity, inverses.
    for (int a = 0; a < F.q; ++a)
        for (int b = 0; b < F.q; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
            for (int c : {0, 1, F.q - 1}) {
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            }
        }
    for (int a = 1; a < F.q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    // Additive group: each row of the addition table is a permutation.
    for (int a = 0; a < F.q; ++a) {
        std::set<int> row;
        for (int b = 0; b < F.q; ++b) row.insert(F.add(a, b));
        CHECK(static_cast<int>(row.size()) == F.q);
    }
    // Characteristic p.
    for (int a = 0; a < F.q; ++a) {
        int s = 0;
        for (int i = 0; i < F.p; ++i) s = F.add(s, a);
        CHECK(s == 0);
    }
}
}

TEST_CASE("field axioms for F3, F5, F9, F25, F13") {
    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {3, 2}, {5, 2}, {13, 1}})
        check_field_axioms(Field::make(p, n));
}

TEST_CASE("prime field encoding matches integer arithmetic") {
    Field F = Field::make(7, 1);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            int ea = F.from_int(a), eb = F.from_int(b);
            CHECK(F.add(ea, eb) == F.from_int(a + b));
            CHECK(F.mul(ea, eb) == F.from_int(a * b));
        }
}

TEST_CASE("quadratic character") {
    for (auto [p, n] : {std::pair{3, 1}, {7, 1}, {3, 2}, {11, 1}}) {
        Field F = Field::make(p, n);
        CHECK(F.chi(0) == 0);
        int plus = 0, minus = 0;
        for (int a = 1; a < F.q; ++a) {
            CHECK(F.chi(F.mul(a, a)) == 1);
            for (int b = 1; b < F.q; ++b) CHECK(F.chi(F.mul(a, b)) == F.chi(a) * F.chi(b));
            (F.chi(a) == 1 ? plus : minus)++;
        }
        CHECK(plus == (F.q - 1) / 2);
        CHECK(minus == (F.q - 1) / 2);
    }
}

TEST_CASE("embedding into the quadratic extension is a ring map") {
    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        Field F = Field::make(p, n);
        Field E = Field::make(p, 2 * n);
        std::vector<int> emb = F.embedding_into(E);
        CHECK(emb[0] == 0);
        CHECK(emb[1] == 1);
        for (int a = 0; a < F.q; ++a)
            for (int b = 0; b < F.q; ++b) {
                CHECK(emb[static_cast<std::size_t>(F.add(a, b))] == E.add(emb[static_cast<std::size_t>(a)], emb[static_cast<std::size_t>(b)]));
                CHECK(emb[static_cast<std::size_t>(F.mul(a, b))] == E.mul(emb[static_cast<std::size_t>(a)], emb[static_cast<std::size_t>(b)]));
            }
        // Norm compatibility: chi_E(embed(a)) = chi_F(a)^2 for nonzero a
        // (every base-field element is a square in the quadratic extension).
        for (int a = 1; a < F.q; ++a) CHECK(E.chi(emb[static_cast<std::size_t>(a)]) == 1);
    }
}

TEST_CASE("polynomial helpers") {
    Field F = Field::make(5, 1);
    auto enc = [&](std::initializer_list<int> cs) {
        Field::Poly out;
        for (int c : cs) out.push_back(F.from_int(c));
        return out;
    };
    // x^2 - 1 = (x-1)(x+1): squarefree, two linear factors.
    CHECK(F.poly_squarefree(enc({-1, 0, 1})));
    CHECK(F.factor_degrees(enc({-1, 0, 1})) == std::vector<int>{1, 1});
    // (x - 1)^2 is not squarefree.
    CHECK(!F.poly_squarefree(enc({1, -2, 1})));
    // x^2 - 2 is irreducible over F5 (2 is a non-square mod 5).
    CHECK(F.factor_degrees(enc({-2, 0, 1})) == std::vector<int>{2});
    // x^6 + x + 1 over F5: evaluate-and-check consistency of poly_eval.
    Field::Poly f = enc({1, 1, 0, 0, 0, 0, 1});
    for (int x = 0; x < 5; ++x) {
        int v = 0;
        // Horner from the top coefficient.
        for (auto it = f.rbegin(); it != f.rend(); ++it) v = F.add(F.mul(v, x), *it);
        CHECK(F.poly_eval(f, x) == v);
    }
    // factor_degrees partitions the degree.
    if (F.poly_squarefree(f)) {
        auto degs = F.factor_degrees(f);
        int s = 0;
        for (int d : degs) s += d;
        CHECK(s == 6);
    }
}

TEST_CASE("rejected constructions") {
    CHECK_THROWS_AS(Field::make(2, 1), field_error);
    CHECK_THROWS_AS(Field::make(4, 1), field_error);
    CHECK_THROWS_AS(Field::make(3, 2, 5), field_error); // over the element cap
    Field F = Field::make(3, 1);
    CHECK_THROWS_AS(F.inv(0), field_error);
}

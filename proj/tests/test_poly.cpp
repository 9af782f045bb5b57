#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "surf10/polynomial.hpp"
#include "surf10/util.hpp"

using namespace surf10;

namespace {

Monomial mono(std::initializer_list<int> exps) {
    Monomial m;
    size_t i = 0;
    for (int e : exps) m.e[i++] = static_cast<uint8_t>(e);
    return m;
}

HomogPoly random_poly(int nvars, int deg, std::mt19937_64& rng, const PrimeField& F) {
    std::vector<Monomial> basis = monomials_of_degree(nvars, deg);
    std::vector<Term> terms;
    for (const Monomial& m : basis)
        if (rng() % 3 == 0) terms.push_back({m, static_cast<uint32_t>(rng() % F.p())});
    return HomogPoly::from_terms(deg, std::move(terms), F);
}

} // namespace

TEST_CASE("grevlex order on the classical degree-2 example in 3 variables") {
    // Expected descending order: x0^2, x0x1, x1^2, x0x2, x1x2, x2^2.
    std::vector<Monomial> expect = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                    mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
    std::vector<Monomial> got = monomials_of_degree(3, 2);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
    for (size_t i = 0; i + 1 < got.size(); ++i) {
        CHECK(grevlex_greater(got[i], got[i + 1]));
        CHECK_FALSE(grevlex_greater(got[i + 1], got[i]));
    }
}

TEST_CASE("monomials_of_degree counts and uniqueness") {
    for (int n = 1; n <= 6; ++n) {
        for (int d = 0; d <= 7; ++d) {
            std::vector<Monomial> ms = monomials_of_degree(n, d);
            CHECK(static_cast<int64_t>(ms.size()) == dim_forms(n, d));
            for (size_t i = 0; i + 1 < ms.size(); ++i) REQUIRE(grevlex_greater(ms[i], ms[i + 1]));
            for (const Monomial& m : ms) {
                REQUIRE(m.degree() == d);
                for (int j = n; j < Monomial::max_vars; ++j) REQUIRE(m.e[static_cast<size_t>(j)] == 0);
            }
        }
    }
}

TEST_CASE("grevlex is a total order compatible with multiplication") {
    std::vector<Monomial> ms = monomials_of_degree(4, 3);
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 2000; ++iter) {
        const Monomial& a = ms[rng() % ms.size()];
        const Monomial& b = ms[rng() % ms.size()];
        const Monomial& c = ms[rng() % ms.size()];
        if (!(a == b)) REQUIRE(grevlex_greater(a, b) != grevlex_greater(b, a));
        if (grevlex_greater(a, b)) REQUIRE(grevlex_greater(a * c, b * c));
        if (grevlex_greater(a, b) && grevlex_greater(b, c)) REQUIRE(grevlex_greater(a, c));
    }
    // degree dominates
    REQUIRE(grevlex_greater(mono({0, 0, 0, 3}), mono({2, 0, 0, 0})));
}

TEST_CASE("monomial divisibility, quotient, lcm") {
    Monomial a = mono({2, 1, 0});
    Monomial b = mono({1, 1, 0});
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(a.divided_by(b) == mono({1, 0, 0}));
    CHECK(a.lcm(mono({0, 2, 1})) == mono({2, 2, 1}));
    CHECK(mono({1, 0, 0}).coprime_to(mono({0, 1, 1})));
    CHECK_FALSE(mono({1, 1, 0}).coprime_to(mono({0, 1, 1})));
}

TEST_CASE("from_terms normalizes: merge, cancel, sort") {
    PrimeField F(31991);
    Monomial m1 = mono({1, 1, 0}), m2 = mono({0, 0, 2});
    HomogPoly f = HomogPoly::from_terms(
        2, {{m2, 5}, {m1, 3}, {m2, F.p() - 5}, {m1, 4}}, F);
    REQUIRE(f.term_count() == 1);
    CHECK(f.leading_monomial() == m1);
    CHECK(f.leading_coeff() == 7);
    CHECK(f.coeff_of(m2) == 0);
    CHECK(f.coeff_of(m1) == 7);

    CHECK_THROWS_AS(HomogPoly::from_terms(3, {{m1, 1}}, F), std::invalid_argument);
}

TEST_CASE("ring axioms for polynomial arithmetic") {
    PrimeField F(31991);
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        HomogPoly f = random_poly(4, 2, rng, F);
        HomogPoly g = random_poly(4, 2, rng, F);
        HomogPoly h = random_poly(4, 3, rng, F);
        CHECK(f.add(g, F) == g.add(f, F));
        CHECK(f.mul(g, F) == g.mul(f, F));
        CHECK(f.add(g, F).mul(h, F) == f.mul(h, F).add(g.mul(h, F), F));
        CHECK(f.sub(f, F).is_zero());
        CHECK(f.mul(g.mul(h, F), F) == f.mul(g, F).mul(h, F));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    PrimeField F(31991);
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        HomogPoly f = random_poly(5, 3, rng, F);
        HomogPoly g = random_poly(5, 2, rng, F);
        std::vector<uint32_t> pt(5);
        for (uint32_t& x : pt) x = static_cast<uint32_t>(rng() % F.p());
        CHECK(f.mul(g, F).evaluate(pt, F) == F.mul(f.evaluate(pt, F), g.evaluate(pt, F)));
        if (f.degree() == g.degree())
            CHECK(f.add(g, F).evaluate(pt, F) == F.add(f.evaluate(pt, F), g.evaluate(pt, F)));
    }
}

TEST_CASE("monic and scale behave") {
    PrimeField F(31991);
    std::mt19937_64 rng(17);
    HomogPoly f = random_poly(3, 4, rng, F);
    REQUIRE(!f.is_zero());
    HomogPoly m = f.monic(F);
    CHECK(m.leading_coeff() == 1);
    CHECK(m.scale(f.leading_coeff(), F) == f);
    CHECK(f.scale(0, F).is_zero());
}

TEST_CASE("mul_term shifts degree and preserves order") {
    PrimeField F(31991);
    std::mt19937_64 rng(19);
    HomogPoly f = random_poly(4, 3, rng, F);
    Monomial m = mono({1, 0, 2, 0});
    HomogPoly g = f.mul_term(m, 5, F);
    CHECK(g.degree() == f.degree() + 3);
    CHECK(g == f.mul(HomogPoly::monomial_term(m, 5, F), F));
}

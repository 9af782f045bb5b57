#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "surf10/families.hpp"
#include "surf10/implicitize.hpp"
#include "surf10/linsys.hpp"
#include "surf10/points.hpp"

using namespace surf10;

TEST_CASE("random points are deterministic, distinct, and canonically scaled") {
    PrimeField F(31991);
    PointConfig a = random_plane_points(15, 42, F);
    PointConfig b = random_plane_points(15, 42, F);
    CHECK(a.points == b.points);
    CHECK(a.points.size() == 15);
    std::set<std::vector<uint32_t>> uniq(a.points.begin(), a.points.end());
    CHECK(uniq.size() == 15);
    for (const auto& pt : a.points) {
        size_t first = 0;
        while (first < 3 && pt[first] == 0) ++first;
        REQUIRE(first < 3);
        CHECK(pt[first] == 1);  // canonical scaling
    }
    PointConfig t = random_torus_points(1, 14, 7, F);
    CHECK(t.points.size() == 14);
    for (const auto& pt : t.points) {
        REQUIRE(pt.size() == 2);
        CHECK(pt[0] != 0);
        CHECK(pt[1] != 0);
    }
    CHECK(random_plane_points(15, 43, F).points != a.points);
}

TEST_CASE("blowup arithmetic: every accepted row gives degree 10, genus 6") {
    const std::vector<int64_t> expected_k2{-6, -5, -4, -3, -2, -1};
    for (size_t i = 0; i < family_ids().size(); ++i) {
        BlowupInvariants inv = blowup_invariants(family_spec(family_ids()[i]));
        CHECK(inv.degree == 10);
        CHECK(inv.genus == 6);
        CHECK(inv.k2 == expected_k2[i]);
    }
    // a classical sanity row: the 3-uple plane embedding has d = 9, genus 1
    BlowupInvariants cubic_plane = blowup_invariants(PlaneSpec{3, {}});
    CHECK(cubic_plane.degree == 9);
    CHECK(cubic_plane.genus == 1);
    CHECK(cubic_plane.k2 == 9);
}

TEST_CASE("blowup arithmetic: rejected rows also give degree 10, genus 6") {
    for (const RejectedFamily& rf : rejected_families()) {
        BlowupInvariants inv = std::holds_alternative<PlaneSpec>(rf.spec)
                                   ? blowup_invariants(std::get<PlaneSpec>(rf.spec))
                                   : blowup_invariants(std::get<HirzebruchSpec>(rf.spec));
        INFO(rf.name);
        CHECK(inv.degree == 10);
        CHECK(inv.genus == 6);
    }
}

TEST_CASE("plane systems: dimension counts and true multiplicity at base points") {
    PrimeField F(31991);
    // all accepted specs have naive dimension 6
    for (int k2 : family_ids()) CHECK(plane_expected_dim(family_spec(k2)) == 6);

    PlaneSpec s = family_spec(-5);  // (6; 2^4, 1^10)
    PointConfig cfg = random_plane_points(14, 1, F);
    std::vector<HomogPoly> basis = plane_system_basis(s, cfg, F);
    REQUIRE(basis.size() == 6);
    for (const HomogPoly& f : basis) {
        CHECK(f.degree() == 6);
        // vanishing at every point, and to order 2 at the four double points:
        // all first partials vanish there too (the imposed rows are the pure
        // order-1 partials; order-0 vanishing follows by the Euler relation)
        for (size_t i = 0; i < cfg.points.size(); ++i)
            for (int m = 0; m < s.mults[i]; ++m)
                for (const Monomial& alpha : monomials_of_degree(3, m))
                    CHECK(partial_value(f, alpha, cfg.points[i], F) == 0);
    }
    // the six forms are linearly independent: stack coefficient vectors
    std::vector<Monomial> mono = monomials_of_degree(3, 6);
    DenseMat M(basis.size(), mono.size());
    for (size_t r = 0; r < basis.size(); ++r)
        for (const Term& t : basis[r].terms()) M.set(r, monomial_index(mono, t.m), t.c);
    CHECK(M.rank(F) == 6);
}

TEST_CASE("plane systems flag a non-generic configuration") {
    PrimeField F(31991);
    // 15 points on a conic cannot impose independent conditions on quintics:
    // param (t^2, t, 1) lies on x0*x2 - x1^2, and quintics through the conic
    // form a 6-dimensional excess family already
    PointConfig cfg;
    cfg.ambient = Ambient::Plane;
    cfg.seed = 0;
    for (uint32_t t = 1; t <= 15; ++t) cfg.points.push_back({F.mul(t, t), t, 1});
    PlaneSpec s = family_spec(-6);
    CHECK_THROWS_WITH(plane_system_basis(s, cfg, F), "points not general, retry seed");
}

TEST_CASE("hirzebruch section counts match the class arithmetic") {
    CHECK(hirzebruch_section_count(0, 4, 3) == 20);
    CHECK(hirzebruch_section_count(1, 4, 7) == 30);  // 8+7+6+5+4
    CHECK(hirzebruch_section_count(0, 1, 0) == 2);
    CHECK(hirzebruch_section_count(2, 3, 4) == 5 + 3 + 1 + 0);
    CHECK(cox_class_basis(1, 4, 7).size() == 30);
}

TEST_CASE("hirzebruch systems: dimension and multiplicity on the chart") {
    PrimeField F(31991);
    HirzebruchSpec s{0, 4, 3, std::vector<int>(14, 1)};
    PointConfig cfg = random_torus_points(0, 14, 3, F);
    std::vector<CoxSection> basis = hirzebruch_system_basis(s, cfg, F);
    REQUIRE(basis.size() == 6);
    for (const CoxSection& sec : basis)
        for (const auto& pt : cfg.points) CHECK(cox_eval(sec, pt, F) == 0);

    // no base points: the full section space of 4C0+7f on F_1
    HirzebruchSpec free_sys{1, 4, 7, {}};
    PointConfig none;
    none.ambient = Ambient::Hirzebruch;
    none.e = 1;
    std::vector<CoxSection> all = hirzebruch_system_basis(free_sys, none, F);
    CHECK(all.size() == 30);

    // double points: all order-<2 chart partials vanish
    HirzebruchSpec dbl{1, 4, 8, {}};
    for (int i = 0; i < 9; ++i) dbl.mults.push_back(2);
    dbl.mults.push_back(1);
    dbl.mults.push_back(1);
    PointConfig cfg2 = random_torus_points(1, 11, 5, F);
    std::vector<CoxSection> basis2 = hirzebruch_system_basis(dbl, cfg2, F);
    REQUIRE(basis2.size() == 6);
    for (const CoxSection& sec : basis2)
        for (size_t i = 0; i < 9; ++i) {
            CHECK(cox_partial_value(sec, 0, 0, cfg2.points[i], F) == 0);
            CHECK(cox_partial_value(sec, 1, 0, cfg2.points[i], F) == 0);
            CHECK(cox_partial_value(sec, 0, 1, cfg2.points[i], F) == 0);
        }
}

TEST_CASE("cox sections multiply like chart polynomials") {
    PrimeField F(31991);
    // on F_1: x has class C0 = (1,0) with chart form 1; y has class C0+f,
    // chart form u; s, t have class f with chart forms 1 and v
    CoxSection x{1, 1, 0, {{{0, 0}, 1}}};
    CoxSection y{1, 1, 1, {{{1, 0}, 1}}};
    CoxSection t{1, 0, 1, {{{0, 1}, 1}}};
    CoxSection xt = cox_mul(x, t, F);
    CHECK(xt.a == 1);
    CHECK(xt.b == 1);
    CoxSection sum = xt;  // x*t + y is a general section of C0 + f
    uint32_t& c = sum.coeffs[{1, 0}];
    c = F.add(c, 1);
    (void)y;
    CHECK(sum.coeffs.size() == 2);
    CHECK(cox_eval(sum, {7, 11}, F) == F.add(11, 7));  // v + u at (u,v) = (7,11)
}

TEST_CASE("implicitization: the Veronese surface has six independent quadrics") {
    PrimeField F(31991);
    std::vector<HomogPoly> quadrics;
    for (const Monomial& m : monomials_of_degree(3, 2))
        quadrics.push_back(HomogPoly::monomial_term(m, 1, F));
    REQUIRE(quadrics.size() == 6);
    Ideal I = implicitize(quadrics, 2, F);
    CHECK(I.gens().size() == 6);
    for (const HomogPoly& g : I.gens()) CHECK(g.degree() == 2);
    // soundness: generators vanish on the image of random points
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        std::vector<uint32_t> src{static_cast<uint32_t>(rng() % F.p()),
                                  static_cast<uint32_t>(rng() % F.p()),
                                  static_cast<uint32_t>(rng() % F.p())};
        std::vector<uint32_t> img = map_image(quadrics, src, F);
        for (const HomogPoly& g : I.gens()) CHECK(g.evaluate(img, F) == 0);
    }
}

TEST_CASE("implicitization in the cox chart: P1 x P1 embedded by (1,1) sections") {
    PrimeField F(31991);
    // the four chart monomials 1, u, v, uv of the (1,1) class on F_0 give the
    // Segre embedding in P^3; its ideal is one quadric
    std::vector<CoxSection> segre;
    for (auto [j, l] : cox_class_basis(0, 1, 1))
        segre.push_back(CoxSection{0, 1, 1, {{{j, l}, 1}}});
    REQUIRE(segre.size() == 4);
    Ideal I = implicitize(segre, 2, F);
    REQUIRE(I.gens().size() == 1);
    CHECK(I.gens()[0].degree() == 2);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        std::vector<uint32_t> src{static_cast<uint32_t>(1 + rng() % (F.p() - 1)),
                                  static_cast<uint32_t>(1 + rng() % (F.p() - 1))};
        std::vector<uint32_t> img = map_image(segre, src, F);
        CHECK(I.gens()[0].evaluate(img, F) == 0);
    }
}

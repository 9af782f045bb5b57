#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "surf10/betti.hpp"
#include "surf10/families.hpp"
#include "surf10/hilbert.hpp"
#include "surf10/koszul.hpp"
#include "surf10/resolution.hpp"
#include "surf10/saturate.hpp"

using namespace surf10;

namespace {

const std::vector<int64_t> kFamilyNumerator{1, 0, 0, -10, 15, -6};

BettiTable expected_table() {
    BettiTable t;
    t.add(0, 0, 1);
    t.add(1, 3, 10);
    t.add(2, 4, 15);
    t.add(3, 5, 6);
    return t;
}

} // namespace

TEST_CASE("the quintic family: ideal, Hilbert data, and both Betti routes") {
    PrimeField F(31991);
    SurfaceModel m = construct_family(-6, 2026, F);
    CHECK(m.attempts == 1);  // observed: the first draw is already generic
    CHECK(m.inv.degree == 10);
    CHECK(m.inv.genus == 6);
    CHECK(m.inv.k2 == -6);
    REQUIRE(m.ideal.gens().size() == 10);
    for (const HomogPoly& g : m.ideal.gens()) CHECK(g.degree() == 3);
    CHECK(is_saturated(m.ideal, F));
    CHECK(h0_twist(m.ideal, 2, F) == 0);
    CHECK(h0_twist(m.ideal, 3, F) == 10);

    HilbertData hd = hilbert_series(m.ideal, F, 7);
    CHECK(hd.numerator == kFamilyNumerator);
    CHECK(hd.values == std::vector<int64_t>{1, 6, 21, 46, 81, 126, 181, 246});
    SurfaceHilbertInvariants si = surface_invariants_from_numerator(hd.numerator, 6);
    CHECK(si.H2 == 10);
    CHECK(si.HK == 0);
    CHECK(si.chi == 1);
    CHECK(si.sectional_genus() == 6);

    // route one: minimal free resolution
    FreeResolution res = minimal_resolution_of_quotient(m.ideal, F, 6);
    REQUIRE(res.is_complex(F));
    REQUIRE(res.is_minimal());
    BettiTable B = betti_from_resolution(res);
    CHECK(B == expected_table());
    CHECK(B.alternating_sum() == hd.numerator);
    CHECK(B.regularity() == 2);
    CHECK(B.is_acm(3));  // codim 3 in P^5
    CHECK(B.check_property_N(3, 3));

    // route two: Koszul strand ranks over the quotient ring
    BettiTable K = betti_via_koszul(m.ideal, F, 4, 6);
    CHECK(K == expected_table());

    // implicitization soundness: generators vanish on the image
    std::mt19937_64 rng(77);
    for (int k = 0; k < 50; ++k) {
        std::vector<uint32_t> src{static_cast<uint32_t>(rng() % F.p()),
                                  static_cast<uint32_t>(rng() % F.p()),
                                  static_cast<uint32_t>(rng() % F.p())};
        std::vector<uint32_t> img = map_image(m.forms, src, F);
        for (const HomogPoly& g : m.ideal.gens()) CHECK(g.evaluate(img, F) == 0);
    }
}

TEST_CASE("the ten-triple-points family: numerator and generator count") {
    PrimeField F(31991);
    SurfaceModel m = construct_family(-1, 8, F);
    CHECK(m.inv.k2 == -1);
    REQUIRE(m.ideal.gens().size() == 10);
    HilbertData hd = hilbert_series(m.ideal, F, 5);
    CHECK(hd.numerator == kFamilyNumerator);
    CHECK(h0_twist(m.ideal, 2, F) == 0);
}

TEST_CASE("construct_family rejects identifiers outside the six rows") {
    PrimeField F(31991);
    CHECK_THROWS_AS(construct_family(0, 1, F), std::invalid_argument);
    CHECK_THROWS_AS(construct_family(-7, 1, F), std::invalid_argument);
}

TEST_CASE("every rejected family lies on exactly one quadric") {
    PrimeField F(31991);
    std::vector<RejectedFamily> rejected = rejected_families();
    REQUIRE(rejected.size() == 5);
    uint64_t seed = 31;
    for (const RejectedFamily& rf : rejected) {
        INFO(rf.name);
        Ideal Q = rejected_family_quadrics(rf, seed++, F);
        REQUIRE(Q.gens().size() == 1);
        CHECK(Q.gens()[0].degree() == 2);
        CHECK(h0_twist(Q, 2, F) == 1);
    }
}

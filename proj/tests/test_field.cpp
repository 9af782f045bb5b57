#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "surf10/field.hpp"

using surf10::PrimeField;

TEST_CASE("field construction validates the modulus") {
    CHECK_THROWS_AS(PrimeField(997), std::invalid_argument);    // too small
    CHECK_THROWS_AS(PrimeField(1000), std::invalid_argument);   // not prime, too small
    CHECK_THROWS_AS(PrimeField(31989), std::invalid_argument);  // 3 * 10663
    CHECK_THROWS_AS(PrimeField(1u << 31), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(31991));
    CHECK_NOTHROW(PrimeField(1009));
    CHECK_NOTHROW(PrimeField(2147483647));  // 2^31 - 1
}

TEST_CASE("field axioms on random triples") {
    for (uint32_t p : {31991u, 1009u, 2147483647u}) {
        PrimeField F(p);
        std::mt19937_64 rng(42);
        for (int iter = 0; iter < 10000; ++iter) {
            uint32_t a = static_cast<uint32_t>(rng() % p);
            uint32_t b = static_cast<uint32_t>(rng() % p);
            uint32_t c = static_cast<uint32_t>(rng() % p);
            REQUIRE(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
            REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.add(a, F.neg(a)) == 0);
            REQUIRE(F.sub(a, b) == F.add(a, F.neg(b)));
            if (a != 0) {
                REQUIRE(F.mul(a, F.inv(a)) == 1);
                REQUIRE(F.div(F.mul(a, b), a) == b);
            }
        }
    }
}

TEST_CASE("pow matches repeated multiplication and Fermat") {
    PrimeField F(31991);
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        uint32_t a = static_cast<uint32_t>(rng() % F.p());
        uint32_t acc = 1;
        for (uint64_t e = 0; e < 12; ++e) {
            REQUIRE(F.pow(a, e) == acc);
            acc = F.mul(acc, a);
        }
        if (a != 0) REQUIRE(F.pow(a, F.p() - 1) == 1);
    }
}

TEST_CASE("from_int reduces signed values") {
    PrimeField F(31991);
    CHECK(F.from_int(-1) == 31990);
    CHECK(F.from_int(31991) == 0);
    CHECK(F.from_int(-31991) == 0);
    CHECK(F.from_int(64000) == 64000 % 31991);
    CHECK(F.from_int(-5) == 31986);
}

TEST_CASE("inverse of zero is rejected") {
    PrimeField F(31991);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("small() reflects the lazy-reduction threshold") {
    CHECK(PrimeField(31991).small());
    CHECK(PrimeField(1009).small());
    CHECK_FALSE(PrimeField(2147483647).small());
    CHECK_FALSE(PrimeField(65537).small());
}

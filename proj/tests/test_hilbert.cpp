#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "surf10/hilbert.hpp"
#include "surf10/poly_io.hpp"
#include "surf10/quotient.hpp"

using namespace surf10;

namespace {

HomogPoly P(const std::string& s, int nvars, const PrimeField& F) {
    return parse_poly(s, nvars, F);
}

HomogPoly random_form(int nvars, int degree, std::mt19937_64& rng, const PrimeField& F) {
    std::vector<Term> ts;
    for (const Monomial& m : monomials_of_degree(nvars, degree))
        ts.push_back({m, static_cast<uint32_t>(rng() % F.p())});
    return HomogPoly::from_terms(degree, std::move(ts), F);
}

} // namespace

TEST_CASE("hilbert series of the full ring and a hyperplane") {
    PrimeField F(31991);
    HilbertData zero = hilbert_series(Ideal({}, 3), F, 5);
    CHECK(zero.numerator == std::vector<int64_t>{1});
    CHECK(zero.values == std::vector<int64_t>{1, 3, 6, 10, 15, 21});
    HilbertData hyp = hilbert_series(Ideal({P("x0", 3, F)}, 3), F, 4);
    CHECK(hyp.numerator == std::vector<int64_t>{1, -1});
    CHECK(hyp.values == std::vector<int64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("hilbert series of a quadric complete intersection") {
    PrimeField F(31991);
    std::mt19937_64 rng(11);
    int n = 3;
    Ideal I({random_form(n, 2, rng, F), random_form(n, 2, rng, F)}, n);
    HilbertData hd = hilbert_series(I, F, 6);
    // two generic conics meet in four points
    CHECK(hd.numerator == std::vector<int64_t>{1, 0, -2, 0, 1});
    CHECK(hd.values == std::vector<int64_t>{1, 3, 4, 4, 4, 4, 4});
    // values match the quotient ring's standard-monomial count
    QuotientRing Q(I, F, 6);
    for (int d = 0; d <= 6; ++d) CHECK(hd.values[static_cast<size_t>(d)] == static_cast<int64_t>(Q.dim(d)));
}

TEST_CASE("hilbert numerator of monomial ideals via the splitting recursion") {
    PrimeField F(31991);
    int n = 4;
    // pairwise coprime: product formula (1-t)(1-t^2)(1-t^3)
    Ideal cop({P("x0", n, F), P("x1^2", n, F), P("x2^3", n, F)}, n);
    CHECK(hilbert_series(cop, F, 3).numerator ==
          std::vector<int64_t>{1, -1, -1, 0, 1, 1, -1});
    // shared variables force the divide-and-conquer branch
    Ideal shared({P("x0*x1", n, F), P("x1*x2", n, F), P("x2*x3", n, F)}, n);
    HilbertData hd = hilbert_series(shared, F, 5);
    QuotientRing Q(Ideal({P("x0*x1", n, F), P("x1*x2", n, F), P("x2*x3", n, F)}, n), F, 5);
    for (int d = 0; d <= 5; ++d) CHECK(hd.values[static_cast<size_t>(d)] == static_cast<int64_t>(Q.dim(d)));
}

TEST_CASE("values_from_numerator inverts the numerator convention") {
    // numerator 1 - 10t^3 + 15t^4 - 6t^5 over six variables: the degree-10
    // sectional-genus-6 family series 1, 6, 21, 46, 81, 126, ...
    std::vector<int64_t> num = {1, 0, 0, -10, 15, -6};
    std::vector<int64_t> vals = values_from_numerator(num, 6, 7);
    CHECK(vals == std::vector<int64_t>{1, 6, 21, 46, 81, 126, 181, 246});
    for (size_t d = 0; d < vals.size(); ++d)
        CHECK(vals[d] == 1 + 5 * static_cast<int64_t>(d) * static_cast<int64_t>(d));
}

TEST_CASE("surface invariants from a Hilbert numerator") {
    // H^2 = 10, H.K = 0, chi(O) = 1 → sectional genus 6
    SurfaceHilbertInvariants inv =
        surface_invariants_from_numerator({1, 0, 0, -10, 15, -6}, 6);
    CHECK(inv.H2 == 10);
    CHECK(inv.HK == 0);
    CHECK(inv.chi == 1);
    CHECK(inv.sectional_genus() == 6);
    // a degree-9 sectional-genus-6 surface in P^4 cut out by 15 quintics:
    // numerator 1 - 15t^5 + 25t^6 - 12t^7 + t^9 (five variables)
    SurfaceHilbertInvariants nine =
        surface_invariants_from_numerator({1, 0, 0, 0, 0, -15, 25, -12, 0, 1}, 5);
    CHECK(nine.H2 == 9);
    CHECK(nine.HK == 1);
    CHECK(nine.chi == 1);
    CHECK(nine.sectional_genus() == 6);
}

TEST_CASE("numerator degree-sum identity") {
    PrimeField F(31991);
    std::mt19937_64 rng(23);
    int n = 4;
    Ideal I({random_form(n, 2, rng, F), random_form(n, 3, rng, F)}, n);
    HilbertData hd = hilbert_series(I, F, 8);
    // reconstruct values from the numerator independently
    std::vector<int64_t> vals = values_from_numerator(hd.numerator, n, 8);
    CHECK(vals == hd.values);
}

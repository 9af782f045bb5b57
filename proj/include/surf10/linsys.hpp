#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surf10/matrix.hpp"
#include "surf10/points.hpp"
#include "surf10/polynomial.hpp"
#include "surf10/util.hpp"

namespace surf10 {

/// Divisor class b0*L - sum b_i E_i on a blowup of the plane: forms of degree
/// b0 with an assigned multiplicity at each base point. mults[i] pairs with
/// points[i] of the configuration.
struct PlaneSpec {
    int b0 = 0;
    std::vector<int> mults;
};

/// Divisor class a*C0 + b*f - sum m_i E_i on a blowup of the Hirzebruch
/// surface F_e, where C0 is the section of self-intersection -e and f the
/// fiber.
struct HirzebruchSpec {
    int e = 0;
    int a = 0;
    int b = 0;
    std::vector<int> mults;
};

/// Degree, sectional genus and canonical self-intersection of the embedded
/// blowup surface.
struct BlowupInvariants {
    int64_t degree = 0;
    int64_t genus = 0;
    int64_t k2 = 0;
};

/// Intersection arithmetic on the blown-up plane: L^2 = 1, E_i^2 = -1,
/// K = -3L + sum E_i.
inline BlowupInvariants blowup_invariants(const PlaneSpec& s) {
    BlowupInvariants r;
    r.degree = static_cast<int64_t>(s.b0) * s.b0;
    r.genus = binomial(s.b0 - 1, 2);
    for (int m : s.mults) {
        r.degree -= static_cast<int64_t>(m) * m;
        r.genus -= binomial(m, 2);
    }
    r.k2 = 9 - static_cast<int64_t>(s.mults.size());
    return r;
}

/// Intersection arithmetic on the blown-up F_e: C0^2 = -e, C0.f = 1, f^2 = 0,
/// K = -2C0 - (e+2)f + sum E_i upstairs.
inline BlowupInvariants blowup_invariants(const HirzebruchSpec& s) {
    BlowupInvariants r;
    r.degree = -static_cast<int64_t>(s.e) * s.a * s.a + 2ll * s.a * s.b;
    int64_t hk = static_cast<int64_t>(s.a) * s.e - 2ll * s.a - 2ll * s.b;
    for (int m : s.mults) {
        r.degree -= static_cast<int64_t>(m) * m;
        hk += m;
    }
    r.genus = (r.degree + hk) / 2 + 1;
    r.k2 = 8 - static_cast<int64_t>(s.mults.size());
    return r;
}

namespace detail {

/// n(n-1)...(n-k+1) mod p; 1 when k = 0.
inline uint32_t falling_factorial(int n, int k, const PrimeField& F) {
    uint64_t v = 1;
    for (int i = 0; i < k; ++i) v = v * static_cast<uint64_t>((n - i) % static_cast<int>(F.p()) + static_cast<int>(F.p())) % F.p();
    return static_cast<uint32_t>(v);
}

/// Value at `point` of the partial derivative d^alpha applied to the monomial
/// x^beta (any variable count; beta must have degree >= |alpha| coordinatewise
/// or the result is zero).
inline uint32_t monomial_partial_value(const Monomial& beta, const Monomial& alpha,
                                       const std::vector<uint32_t>& point,
                                       const PrimeField& F) {
    uint64_t v = 1;
    for (size_t i = 0; i < point.size(); ++i) {
        int b = beta.e[i], a = alpha.e[i];
        if (b < a) return 0;
        v = v * falling_factorial(b, a, F) % F.p();
        if (b > a) v = v * F.pow(point[i], b - a) % F.p();
    }
    return static_cast<uint32_t>(v);
}

} // namespace detail

/// Value of the order-|alpha| partial derivative of f at the point.
inline uint32_t partial_value(const HomogPoly& f, const Monomial& alpha,
                              const std::vector<uint32_t>& point, const PrimeField& F) {
    uint64_t acc = 0;
    for (const Term& t : f.terms())
        acc = (acc + static_cast<uint64_t>(t.c) *
                         detail::monomial_partial_value(t.m, alpha, point, F)) %
              F.p();
    return static_cast<uint32_t>(acc);
}

/// Naive dimension count of the plane system: forms minus independent point
/// conditions (an m-fold point imposes C(m+1,2) conditions).
inline int64_t plane_expected_dim(const PlaneSpec& s) {
    int64_t n = binomial(s.b0 + 2, 2);
    for (int m : s.mults) n -= binomial(m + 1, 2);
    return n;
}

/// Basis of the forms of degree b0 with multiplicity >= mults[i] at
/// points[i]. A multiplicity-m condition is imposed through the pure
/// order-(m-1) partial derivatives; since the characteristic exceeds the
/// degree, repeated Euler relations make every lower-order derivative vanish
/// as well, so this is the full multiplicity condition with C(m+1,2)
/// independent rows. Throws when the kernel dimension differs from the naive
/// count, which signals a non-generic point draw.
inline std::vector<HomogPoly> plane_system_basis(const PlaneSpec& s, const PointConfig& cfg,
                                                 const PrimeField& F) {
    if (cfg.ambient != Ambient::Plane)
        throw std::invalid_argument("linsys: plane spec needs plane points");
    if (cfg.points.size() != s.mults.size())
        throw std::invalid_argument("linsys: one multiplicity per point required");
    if (F.p() <= static_cast<uint32_t>(s.b0))
        throw std::invalid_argument("linsys: characteristic must exceed the degree");
    std::vector<Monomial> basis = monomials_of_degree(3, s.b0);
    size_t rows = 0;
    for (int m : s.mults) rows += static_cast<size_t>(binomial(m + 1, 2));
    DenseMat A(rows, basis.size());
    size_t r = 0;
    for (size_t i = 0; i < cfg.points.size(); ++i)
        for (const Monomial& alpha : monomials_of_degree(3, s.mults[i] - 1)) {
            for (size_t c = 0; c < basis.size(); ++c) {
                uint32_t v = detail::monomial_partial_value(basis[c], alpha, cfg.points[i], F);
                if (v != 0) A.set(r, c, v);
            }
            ++r;
        }
    std::vector<std::vector<uint32_t>> ker = A.kernel_basis(F);
    if (static_cast<int64_t>(ker.size()) != plane_expected_dim(s))
        throw std::runtime_error("points not general, retry seed");
    std::vector<HomogPoly> out;
    out.reserve(ker.size());
    for (const std::vector<uint32_t>& v : ker)
        out.push_back(detail::poly_from_coeffs(v, basis, s.b0, F));
    return out;
}

/// A section of the class a*C0 + b*f on F_e, stored in the dense-chart
/// normalization: the chart monomial u^j v^l corresponds to the Cox monomial
/// x^(a-j) y^j s^(b-e*j-l) t^l, where [x] = C0, [y] = C0 + e*f and [s] = [t]
/// = f. Exponents therefore satisfy 0 <= j <= a and 0 <= l <= b - e*j, and
/// multiplication of sections is multiplication of chart polynomials with
/// the classes added.
struct CoxSection {
    int e = 0;
    int a = 0;
    int b = 0;
    std::map<std::pair<int, int>, uint32_t> coeffs;  // (j, l) -> nonzero coeff

    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const CoxSection& x, const CoxSection& y) {
        return x.e == y.e && x.a == y.a && x.b == y.b && x.coeffs == y.coeffs;
    }
};

/// Chart exponent pairs (j, l) of the class a*C0 + b*f on F_e, in a fixed
/// deterministic order. Size = sum_{j=0}^{a} max(0, b - e*j + 1).
inline std::vector<std::pair<int, int>> cox_class_basis(int e, int a, int b) {
    if (e < 0 || a < 0) throw std::invalid_argument("linsys: invalid Hirzebruch class");
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j <= a; ++j)
        for (int l = 0; l + e * j <= b; ++l) out.emplace_back(j, l);
    return out;
}

inline int64_t hirzebruch_section_count(int e, int a, int b) {
    int64_t n = 0;
    for (int j = 0; j <= a; ++j)
        if (b - e * j + 1 > 0) n += b - e * j + 1;
    return n;
}

inline CoxSection cox_mul(const CoxSection& x, const CoxSection& y, const PrimeField& F) {
    if (x.e != y.e) throw std::invalid_argument("linsys: sections live on different surfaces");
    CoxSection r;
    r.e = x.e;
    r.a = x.a + y.a;
    r.b = x.b + y.b;
    for (const auto& [em, cm] : x.coeffs)
        for (const auto& [en, cn] : y.coeffs) {
            std::pair<int, int> key{em.first + en.first, em.second + en.second};
            uint32_t& slot = r.coeffs[key];
            slot = static_cast<uint32_t>((slot + static_cast<uint64_t>(cm) * cn) % F.p());
        }
    std::erase_if(r.coeffs, [](const auto& kv) { return kv.second == 0; });
    return r;
}

/// Value of the chart polynomial at a torus point (u, v).
inline uint32_t cox_eval(const CoxSection& s, const std::vector<uint32_t>& pt,
                         const PrimeField& F) {
    uint64_t acc = 0;
    for (const auto& [ex, c] : s.coeffs) {
        uint64_t v = c;
        if (ex.first != 0) v = v * F.pow(pt[0], ex.first) % F.p();
        if (ex.second != 0) v = v * F.pow(pt[1], ex.second) % F.p();
        acc = (acc + v) % F.p();
    }
    return static_cast<uint32_t>(acc);
}

/// Value of (d/du)^au (d/dv)^av applied to the chart polynomial, at pt.
inline uint32_t cox_partial_value(const CoxSection& s, int au, int av,
                                  const std::vector<uint32_t>& pt, const PrimeField& F) {
    uint64_t acc = 0;
    for (const auto& [ex, c] : s.coeffs) {
        if (ex.first < au || ex.second < av) continue;
        uint64_t v = static_cast<uint64_t>(detail::falling_factorial(ex.first, au, F)) *
                     detail::falling_factorial(ex.second, av, F) % F.p();
        if (ex.first > au) v = v * F.pow(pt[0], ex.first - au) % F.p();
        if (ex.second > av) v = v * F.pow(pt[1], ex.second - av) % F.p();
        acc = (acc + v * c) % F.p();
    }
    return static_cast<uint32_t>(acc);
}

inline int64_t hirzebruch_expected_dim(const HirzebruchSpec& s) {
    int64_t n = hirzebruch_section_count(s.e, s.a, s.b);
    for (int m : s.mults) n -= binomial(m + 1, 2);
    return n;
}

/// Basis of the sections of a*C0 + b*f on F_e with multiplicity >= mults[i]
/// at torus point i. The chart is affine, so a multiplicity-m condition
/// imposes every partial derivative of order < m — C(m+1,2) rows. Throws the
/// retry signal when the dimension differs from the naive count.
inline std::vector<CoxSection> hirzebruch_system_basis(const HirzebruchSpec& s,
                                                       const PointConfig& cfg,
                                                       const PrimeField& F) {
    if (cfg.ambient != Ambient::Hirzebruch || cfg.e != s.e)
        throw std::invalid_argument("linsys: Hirzebruch spec needs torus points on the same F_e");
    if (cfg.points.size() != s.mults.size())
        throw std::invalid_argument("linsys: one multiplicity per point required");
    std::vector<std::pair<int, int>> basis = cox_class_basis(s.e, s.a, s.b);
    size_t rows = 0;
    for (int m : s.mults) rows += static_cast<size_t>(binomial(m + 1, 2));
    DenseMat A(rows, basis.size());
    size_t r = 0;
    for (size_t i = 0; i < cfg.points.size(); ++i)
        for (int order = 0; order < s.mults[i]; ++order)
            for (int au = order; au >= 0; --au) {
                int av = order - au;
                for (size_t c = 0; c < basis.size(); ++c) {
                    auto [j, l] = basis[c];
                    if (j < au || l < av) continue;
                    uint64_t v = static_cast<uint64_t>(detail::falling_factorial(j, au, F)) *
                                 detail::falling_factorial(l, av, F) % F.p();
                    if (j > au) v = v * F.pow(cfg.points[i][0], j - au) % F.p();
                    if (l > av) v = v * F.pow(cfg.points[i][1], l - av) % F.p();
                    if (v != 0) A.set(r, c, static_cast<uint32_t>(v));
                }
                ++r;
            }
    std::vector<std::vector<uint32_t>> ker = A.kernel_basis(F);
    if (static_cast<int64_t>(ker.size()) != hirzebruch_expected_dim(s))
        throw std::runtime_error("points not general, retry seed");
    std::vector<CoxSection> out;
    out.reserve(ker.size());
    for (const std::vector<uint32_t>& v : ker) {
        CoxSection sec;
        sec.e = s.e;
        sec.a = s.a;
        sec.b = s.b;
        for (size_t c = 0; c < basis.size(); ++c)
            if (v[c] % F.p() != 0) sec.coeffs[basis[c]] = v[c] % F.p();
        out.push_back(std::move(sec));
    }
    return out;
}

} // namespace surf10

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "surf10/groebner.hpp"
#include "surf10/util.hpp"

namespace surf10 {

/// Hilbert data of a graded quotient R/I: the function values h(0..D) and the
/// numerator N(t) with H(t) = N(t)/(1-t)^nvars (nvars = n+1 variables for P^n).
struct HilbertData {
    std::vector<int64_t> values;
    std::vector<int64_t> numerator;
};

namespace detail {

/// Minimal generators only: drop any monomial divisible by another.
inline std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), grevlex_less);
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool divisible = false;
        for (const Monomial& g : out)
            if (g.divides(m)) { divisible = true; break; }
        if (!divisible) out.push_back(m);
    }
    return out;
}

inline void add_scaled_shifted(std::vector<int64_t>& acc, const std::vector<int64_t>& v,
                               int shift, int64_t scale) {
    if (acc.size() < v.size() + static_cast<size_t>(shift))
        acc.resize(v.size() + static_cast<size_t>(shift), 0);
    for (size_t i = 0; i < v.size(); ++i) acc[i + static_cast<size_t>(shift)] += scale * v[i];
}

/// K-polynomial of a monomial ideal by the standard splitting
///   N(M) = N(M + (x)) + t * N(M : x)
/// on a variable x occurring in a non-pure-power generator; bases are
/// products over pairwise-coprime generators. Memoized on the sorted packed
/// generator list.
class MonomialHilbert {
public:
    std::vector<int64_t> numerator(std::vector<Monomial> gens) {
        gens = minimize_monomials(gens);
        std::vector<uint64_t> key;
        key.reserve(gens.size());
        for (const Monomial& m : gens) key.push_back(m.packed());
        std::sort(key.begin(), key.end());
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<int64_t> result = compute(gens);
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::vector<int64_t> compute(const std::vector<Monomial>& gens) {
        if (gens.empty()) return {1};
        if (!gens.front().is_one()) {
            bool pairwise_coprime = true;
            for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
                for (size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
                    if (!gens[i].coprime_to(gens[j])) pairwise_coprime = false;
            if (pairwise_coprime) {
                // product of (1 - t^deg)
                std::vector<int64_t> acc{1};
                for (const Monomial& m : gens) {
                    std::vector<int64_t> next = acc;
                    add_scaled_shifted(next, acc, m.degree(), -1);
                    acc = std::move(next);
                }
                return acc;
            }
        } else {
            return {0};  // unit ideal: numerator of the zero module
        }
        // pivot: a variable shared by the most generators
        int pivot = -1;
        int best = 0;
        for (int v = 0; v < Monomial::max_vars; ++v) {
            int cnt = 0;
            for (const Monomial& m : gens)
                if (m.e[static_cast<size_t>(v)] != 0) ++cnt;
            if (cnt > best) { best = cnt; pivot = v; }
        }
        Monomial x = Monomial::variable(pivot);
        std::vector<Monomial> plus;   // M + (x)
        std::vector<Monomial> colon;  // M : x
        plus.push_back(x);
        for (const Monomial& m : gens) {
            if (m.e[static_cast<size_t>(pivot)] == 0) plus.push_back(m);
            colon.push_back(m.e[static_cast<size_t>(pivot)] > 0 ? m.divided_by(x) : m);
        }
        std::vector<int64_t> acc = numerator(std::move(plus));
        add_scaled_shifted(acc, numerator(std::move(colon)), 1, 1);
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        return acc;
    }

    std::map<std::vector<uint64_t>, std::vector<int64_t>> memo_;
};

} // namespace detail

inline std::vector<Monomial> lead_monomials(const std::vector<HomogPoly>& polys) {
    std::vector<Monomial> out;
    for (const HomogPoly& g : polys)
        if (!g.is_zero()) out.push_back(g.leading_monomial());
    return out;
}

inline std::vector<int64_t> hilbert_numerator_of_lead(const std::vector<Monomial>& lead,
                                                      int /*nvars*/) {
    detail::MonomialHilbert mh;
    return mh.numerator(lead);
}

/// Expand N(t)/(1-t)^nvars to values h(0..D).
inline std::vector<int64_t> values_from_numerator(const std::vector<int64_t>& num, int nvars,
                                                  int D) {
    std::vector<int64_t> h(static_cast<size_t>(D) + 1, 0);
    for (int d = 0; d <= D; ++d) {
        int64_t acc = 0;
        for (size_t k = 0; k < num.size(); ++k)
            acc += num[k] * dim_forms(nvars, d - static_cast<int>(k));
        h[static_cast<size_t>(d)] = acc;
    }
    return h;
}

/// Hilbert data of R/I from a Gröbner basis of I, exact to all degrees
/// (values reported up to D).
inline HilbertData hilbert_series(const Ideal& I, const PrimeField& F, int D = 10) {
    HilbertData hd;
    hd.numerator = hilbert_numerator_of_lead(lead_monomials(I.gb(F)), I.nvars());
    hd.values = values_from_numerator(hd.numerator, I.nvars(), D);
    return hd;
}

/// Invariants of a 2-dimensional projective scheme read off the Hilbert
/// polynomial: h(d) = (H2/2) d^2 - (HK/2) d + chi for d >> 0. The sectional
/// genus is pi = (HK + H2)/2 + 1.
struct SurfaceHilbertInvariants {
    int64_t H2 = 0;   // degree
    int64_t HK = 0;
    int64_t chi = 0;  // Euler characteristic of the structure sheaf
    int64_t sectional_genus() const { return (HK + H2) / 2 + 1; }
};

inline SurfaceHilbertInvariants surface_invariants_from_numerator(
    const std::vector<int64_t>& num, int nvars) {
    // Beyond the numerator degree the function equals the polynomial.
    int B = static_cast<int>(num.size());
    auto val = [&](int d) {
        int64_t acc = 0;
        for (size_t k = 0; k < num.size(); ++k)
            acc += num[k] * dim_forms(nvars, d - static_cast<int>(k));
        return acc;
    };
    int64_t v0 = val(B), v1 = val(B + 1), v2 = val(B + 2);
    SurfaceHilbertInvariants s;
    s.H2 = v2 - 2 * v1 + v0;  // second difference = 2 * leading coefficient
    // first difference: v1 - v0 = a2*(2B+1) + a1, with 2*a2 = H2, a1 = -HK/2
    int64_t two_a1 = 2 * (v1 - v0) - s.H2 * (2 * B + 1);
    s.HK = -two_a1;
    // value: v0 = a2 B^2 + a1 B + chi
    s.chi = v0 - (s.H2 * B * B + two_a1 * B) / 2;
    return s;
}

} // namespace surf10

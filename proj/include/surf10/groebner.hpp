#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "surf10/polynomial.hpp"
#include "surf10/span.hpp"

namespace surf10 {

/// Full normal form: no term of the result is divisible by any leading
/// monomial of G. G's elements must be nonzero; they need not be monic.
inline HomogPoly normal_form(HomogPoly f, const std::vector<HomogPoly>& G, const PrimeField& F) {
    if (f.is_zero()) return f;
    HomogPoly rem(f.degree());
    while (!f.is_zero()) {
        const Monomial& lm = f.leading_monomial();
        const HomogPoly* red = nullptr;
        for (const HomogPoly& g : G) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                red = &g;
                break;
            }
        }
        if (red == nullptr) {
            // move the leading term to the remainder
            rem = rem.add(HomogPoly::monomial_term(lm, f.leading_coeff(), F), F);
            f = f.sub(HomogPoly::monomial_term(lm, f.leading_coeff(), F), F);
        } else {
            uint32_t c = F.div(f.leading_coeff(), red->leading_coeff());
            f = f.sub(red->mul_term(lm.divided_by(red->leading_monomial()), c, F), F);
        }
    }
    return rem;
}

namespace detail {

struct SPair {
    int degree;
    size_t i, j;  // i < j
    bool operator>(const SPair& o) const {
        return std::tie(degree, i, j) > std::tie(o.degree, o.i, o.j);
    }
};

inline HomogPoly s_poly(const HomogPoly& f, const HomogPoly& g, const PrimeField& F) {
    Monomial L = f.leading_monomial().lcm(g.leading_monomial());
    HomogPoly a = f.mul_term(L.divided_by(f.leading_monomial()), F.inv(f.leading_coeff()), F);
    HomogPoly b = g.mul_term(L.divided_by(g.leading_monomial()), F.inv(g.leading_coeff()), F);
    return a.sub(b, F);
}

} // namespace detail

/// Buchberger's algorithm, normal strategy: pairs processed by increasing
/// S-polynomial degree, with the coprime-lead and chain criteria. The result
/// is auto-reduced (minimal leading terms, tails fully reduced), monic, and
/// sorted ascending in grevlex — a canonical reduced Gröbner basis.
inline std::vector<HomogPoly> buchberger(const std::vector<HomogPoly>& gens, const PrimeField& F) {
    std::vector<HomogPoly> G;
    for (const HomogPoly& g : gens)
        if (!g.is_zero()) G.push_back(g.monic(F));
    std::priority_queue<detail::SPair, std::vector<detail::SPair>, std::greater<>> pairs;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            Monomial L = G[i].leading_monomial().lcm(G[k].leading_monomial());
            pairs.push({L.degree(), i, k});
        }
    };
    for (size_t k = 0; k < G.size(); ++k) push_pairs_for(k);

    while (!pairs.empty()) {
        detail::SPair pr = pairs.top();
        pairs.pop();
        const Monomial& li = G[pr.i].leading_monomial();
        const Monomial& lj = G[pr.j].leading_monomial();
        handled.insert({pr.i, pr.j});
        if (li.coprime_to(lj)) continue;  // product criterion
        Monomial L = li.lcm(lj);
        bool chained = false;
        for (size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].leading_monomial().divides(L)) continue;
            auto key = [&](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (handled.count(key(pr.i, k)) != 0 && handled.count(key(pr.j, k)) != 0) chained = true;
        }
        if (chained) continue;  // chain criterion
        HomogPoly r = normal_form(detail::s_poly(G[pr.i], G[pr.j], F), G, F);
        if (!r.is_zero()) {
            G.push_back(r.monic(F));
            push_pairs_for(G.size() - 1);
        }
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<HomogPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = G[j].leading_monomial();
            const Monomial& b = G[i].leading_monomial();
            if (a == b) redundant = j < i;  // keep the first of duplicates
            else if (a.divides(b)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<HomogPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<HomogPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(normal_form(minimal[i], others, F).monic(F));
    }
    std::sort(out.begin(), out.end(), [](const HomogPoly& a, const HomogPoly& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
}

/// Buchberger's criterion as a check: every S-polynomial reduces to zero.
inline bool is_groebner_basis(const std::vector<HomogPoly>& G, const PrimeField& F) {
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].leading_monomial().coprime_to(G[j].leading_monomial())) continue;
            if (!normal_form(detail::s_poly(G[i], G[j], F), G, F).is_zero()) return false;
        }
    return true;
}

/// Homogeneous ideal with a lazily cached canonical Gröbner basis.
class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<HomogPoly> gens, int nvars) : gens_(std::move(gens)), nvars_(nvars) {
        if (nvars < 1 || nvars > Monomial::max_vars)
            throw std::invalid_argument("ideal: variable count out of range");
        std::erase_if(gens_, [](const HomogPoly& g) { return g.is_zero(); });
    }

    const std::vector<HomogPoly>& gens() const { return gens_; }
    int nvars() const { return nvars_; }

    const std::vector<HomogPoly>& gb(const PrimeField& F) const {
        if (!gb_) gb_ = buchberger(gens_, F);
        return *gb_;
    }

    bool contains(const HomogPoly& f, const PrimeField& F) const {
        return normal_form(f, gb(F), F).is_zero();
    }

private:
    std::vector<HomogPoly> gens_;
    int nvars_ = 0;
    mutable std::optional<std::vector<HomogPoly>> gb_;
};

/// dim of I_d computed without Gröbner bases: the span of {m * g} over
/// monomials m of complementary degree. Used as an independent oracle against
/// the leading-ideal count.
inline size_t ideal_degree_dimension(const std::vector<HomogPoly>& gens, int nvars, int d,
                                     const PrimeField& F) {
    std::vector<Monomial> basis = monomials_of_degree(nvars, d);
    // column index of each degree-d monomial
    auto col_of = [&](const Monomial& m) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m, grevlex_greater);
        return static_cast<size_t>(it - basis.begin());
    };
    Span sp(basis.size());
    for (const HomogPoly& g : gens) {
        if (g.is_zero() || g.degree() > d) continue;
        for (const Monomial& m : monomials_of_degree(nvars, d - g.degree())) {
            std::vector<uint32_t> v(basis.size(), 0);
            for (const Term& t : g.terms()) v[col_of(t.m * m)] = F.add(v[col_of(t.m * m)], t.c);
            sp.insert(std::move(v), F);
        }
    }
    return sp.dim();
}

} // namespace surf10

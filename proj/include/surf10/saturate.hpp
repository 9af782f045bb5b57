#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "surf10/hilbert.hpp"
#include "surf10/quotient.hpp"
#include "surf10/resolution.hpp"
#include "surf10/span.hpp"

namespace surf10 {

namespace detail {

/// Kernel of R_d -> ⊕_v (R/I)_{d+1}, f ↦ (x_v·f mod I)_v — the degree-d part
/// of the ideal quotient (I : (x_0,…,x_N)).
inline std::vector<std::vector<uint32_t>> colon_irrelevant_degree(const QuotientRing& Q, int d) {
    int nvars = Q.nvars();
    std::vector<Monomial> amb = monomials_of_degree(nvars, d);
    size_t h = Q.dim(d + 1);
    DenseMat E(static_cast<size_t>(nvars) * h, amb.size());
    const PrimeField& F = Q.field();
    for (size_t c = 0; c < amb.size(); ++c)
        for (int v = 0; v < nvars; ++v) {
            const std::vector<uint32_t>& col = Q.nf_monomial(amb[c] * Monomial::variable(v));
            for (size_t i = 0; i < col.size(); ++i)
                if (col[i] != 0) E.set(static_cast<size_t>(v) * h + i, c, col[i]);
        }
    return E.kernel_basis(F);
}

} // namespace detail

/// Degree bound through which saturation needs to be inspected: past the
/// Hilbert numerator and the generators nothing new can appear for the ideals
/// this engine produces (their saturations are generated within this range;
/// downstream Betti/Hilbert verification would expose a violation).
inline int saturation_degree_bound(const Ideal& I, const PrimeField& F) {
    int d = 0;
    for (const HomogPoly& g : I.gens()) d = std::max(d, g.degree());
    HilbertData hd = hilbert_series(I, F, d + 2);
    int num_deg = static_cast<int>(hd.numerator.size()) - 1;
    return std::max(num_deg, d) + 2;
}

/// True when (I : (x_0,…,x_N))_d = I_d for all d ≤ dmax.
inline bool is_saturated_through(const Ideal& I, const PrimeField& F, int dmax) {
    QuotientRing Q(I, F, dmax + 1);
    for (int d = 0; d <= dmax; ++d) {
        size_t colon = detail::colon_irrelevant_degree(Q, d).size();
        size_t ideal_dim =
            static_cast<size_t>(dim_forms(Q.nvars(), d)) - Q.dim(d);
        if (colon != ideal_dim) return false;
    }
    return true;
}

inline bool is_saturated(const Ideal& I, const PrimeField& F) {
    return is_saturated_through(I, F, saturation_degree_bound(I, F));
}

/// Saturate with respect to the irrelevant maximal ideal by repeatedly
/// adjoining everything the ideal quotient gains, until stable. Returns an
/// ideal with a minimal generating set.
inline Ideal saturate_irrelevant(const Ideal& I, const PrimeField& F) {
    int nvars = I.nvars();
    if (I.gens().empty()) return I;
    int dmax = saturation_degree_bound(I, F);
    std::vector<HomogPoly> gens = I.gens();
    for (;;) {
        Ideal work(gens, nvars);
        QuotientRing Q(work, F, dmax + 1);
        std::vector<HomogPoly> fresh;
        for (int d = 0; d <= dmax; ++d) {
            std::vector<std::vector<uint32_t>> ker = detail::colon_irrelevant_degree(Q, d);
            if (ker.empty()) continue;
            std::vector<Monomial> amb = monomials_of_degree(nvars, d);
            Span new_nf(Q.dim(d));
            for (const std::vector<uint32_t>& v : ker) {
                HomogPoly f = detail::poly_from_coeffs(v, amb, d, F);
                if (f.is_zero()) continue;
                std::vector<uint32_t> nf = Q.nf(f);
                bool zero = true;
                for (uint32_t x : nf) zero = zero && (x == 0);
                if (zero) continue;  // already in the ideal
                if (new_nf.insert(std::move(nf), F)) fresh.push_back(std::move(f));
            }
        }
        if (fresh.empty()) break;
        for (HomogPoly& f : fresh) gens.push_back(std::move(f));
    }
    return Ideal(minimal_generators(gens, nvars, F), nvars);
}

} // namespace surf10

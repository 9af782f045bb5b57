#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "surf10/resolution.hpp"

namespace surf10 {

/// Apply Hom(-, R(-s)) to a map of free modules. The dual of R(-a) is
/// R(-(s-a)), so twists map a ↦ s - a and the matrix transposes; sources and
/// targets swap roles.
inline GradedMatrix transpose_twisted(const GradedMatrix& M, int s) {
    std::vector<int> rt, ct;
    rt.reserve(M.cols());
    ct.reserve(M.rows());
    for (int t : M.col_twists) rt.push_back(s - t);
    for (int t : M.row_twists) ct.push_back(s - t);
    GradedMatrix out(rt, ct);
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c) out.entries[c][r] = M.entries[r][c];
    return out;
}

/// Presentation of the cokernel of the transposed last differential of F,
/// dualized into R(twist): generators are the duals of the last free module's
/// basis. When F is minimal of length equal to the codimension of its
/// module's support, this presents the canonical-module twist
/// Ext^length(M, R(twist)).
inline GradedModulePresentation dualize_complex(const FreeResolution& F, int twist) {
    if (F.diffs.empty())
        throw std::invalid_argument("dualize: resolution has no differentials");
    return GradedModulePresentation{transpose_twisted(F.diffs.back(), -twist)};
}

/// A module presented as a subquotient of a dualized resolution: generators
/// carry explicit cocycle lifts into the dual free module.
struct ExtPresentation {
    GradedModulePresentation pres;  // generators (row twists) and relations
    GradedMatrix lifts;             // rows = dual free-module twists, columns = generators
};

/// Ext^q(M, R(-s)) for the module resolved by res, presented by generators
/// and relations: cocycles modulo coboundaries in the dualized complex,
/// scanned degree by degree up to degree_bound. Both the generator and the
/// relation lists are minimal (each new element is tested against monomial
/// multiples of the ones already found).
inline ExtPresentation ext_presentation(const FreeResolution& res, int q, int s, int nvars,
                                        const PrimeField& F, int degree_bound) {
    if (q < 0 || static_cast<size_t>(q) > res.length())
        throw std::invalid_argument("ext: homological index out of range");
    // dual twists of F_q, F_{q-1}, F_{q+1}
    std::vector<int> amb_twists;
    for (int t : res.twists_at(static_cast<size_t>(q))) amb_twists.push_back(s - t);
    bool has_out = static_cast<size_t>(q) < res.length();   // map F_q^v -> F_{q+1}^v
    bool has_in = q > 0;                                     // map F_{q-1}^v -> F_q^v
    GradedMatrix A2, A1;
    if (has_out) A2 = transpose_twisted(res.diffs[static_cast<size_t>(q)], s);
    if (has_in) A1 = transpose_twisted(res.diffs[static_cast<size_t>(q) - 1], s);

    auto ambient_dim = [&](int d) {
        size_t n = 0;
        for (int t : amb_twists) n += static_cast<size_t>(dim_forms(nvars, d - t));
        return n;
    };

    struct Gen {
        int degree;
        std::vector<uint32_t> lift;  // ambient coordinates at its degree
    };
    struct Rel {
        int degree;
        std::vector<uint32_t> coords;  // in ⊕R(-gen degree) at its degree
        size_t gen_count;              // generators known when it was found
    };
    std::vector<Gen> gens;
    std::vector<Rel> rels;

    // polynomial lift columns of the generators found so far
    auto lift_matrix = [&]() {
        std::vector<int> ct;
        ct.reserve(gens.size());
        for (const Gen& g : gens) ct.push_back(g.degree);
        GradedMatrix G(amb_twists, ct);
        for (size_t k = 0; k < gens.size(); ++k) {
            size_t off = 0;
            for (size_t r = 0; r < amb_twists.size(); ++r) {
                std::vector<Monomial> basis =
                    monomials_of_degree(nvars, gens[k].degree - amb_twists[r]);
                std::vector<uint32_t> block(
                    gens[k].lift.begin() + static_cast<std::ptrdiff_t>(off),
                    gens[k].lift.begin() + static_cast<std::ptrdiff_t>(off + basis.size()));
                G.entries[r][k] =
                    detail::poly_from_coeffs(block, basis, gens[k].degree - amb_twists[r], F);
                off += basis.size();
            }
        }
        return G;
    };

    int dmin = amb_twists.empty() ? 0 : *std::min_element(amb_twists.begin(), amb_twists.end());
    for (int d = dmin; d <= degree_bound; ++d) {
        size_t amb = ambient_dim(d);
        if (amb == 0) continue;
        // cocycles at degree d
        std::vector<std::vector<uint32_t>> cocycles;
        if (has_out) {
            cocycles = A2.degree_matrix(d, nvars, F).kernel_basis(F);
        } else {
            cocycles.assign(amb, std::vector<uint32_t>(amb, 0));
            for (size_t j = 0; j < amb; ++j) cocycles[j][j] = 1;
        }
        GradedMatrix G = lift_matrix();
        if (!cocycles.empty()) {
            std::vector<DenseMat> seeds;
            if (has_in) seeds.push_back(A1.degree_matrix(d, nvars, F));
            if (!gens.empty()) seeds.push_back(G.degree_matrix(d, nvars, F));
            Span span(amb);
            if (!seeds.empty()) {
                std::vector<const DenseMat*> ptrs;
                ptrs.reserve(seeds.size());
                for (const DenseMat& m : seeds) ptrs.push_back(&m);
                span = column_span(ptrs, amb, F);
            }
            bool grew = false;
            for (std::vector<uint32_t>& v : cocycles) {
                std::vector<uint32_t> copy = v;
                if (!span.insert(std::move(copy), F)) continue;
                gens.push_back(Gen{d, v});
                grew = true;
            }
            if (grew) G = lift_matrix();
        }
        if (gens.empty()) continue;
        // relations at degree d: combinations of generators landing in im A1
        DenseMat L = G.degree_matrix(d, nvars, F);
        size_t lcols = L.cols();
        size_t acols = has_in ? A1.source_dim(d, nvars) : 0;
        if (lcols == 0) continue;
        DenseMat combined(amb, lcols + acols);
        for (size_t r = 0; r < amb; ++r)
            for (size_t c = 0; c < lcols; ++c) {
                uint32_t x = L.get(r, c, F);
                if (x != 0) combined.set(r, c, x);
            }
        if (has_in) {
            DenseMat img = A1.degree_matrix(d, nvars, F);
            for (size_t r = 0; r < amb; ++r)
                for (size_t c = 0; c < acols; ++c) {
                    uint32_t x = img.get(r, c, F);
                    if (x != 0) combined.set(r, lcols + c, x);
                }
        }
        std::vector<std::vector<uint32_t>> ker = combined.kernel_basis(F);
        if (ker.empty()) continue;
        Span rel_span(lcols);
        if (!rels.empty()) {
            std::vector<int> gt;
            for (const Gen& g : gens) gt.push_back(g.degree);
            std::vector<int> rt;
            for (const Rel& r : rels) rt.push_back(r.degree);
            GradedMatrix RM(gt, rt);
            for (size_t k = 0; k < rels.size(); ++k) {
                size_t off = 0;
                for (size_t r = 0; r < rels[k].gen_count; ++r) {
                    std::vector<Monomial> basis =
                        monomials_of_degree(nvars, rels[k].degree - gens[r].degree);
                    std::vector<uint32_t> block(
                        rels[k].coords.begin() + static_cast<std::ptrdiff_t>(off),
                        rels[k].coords.begin() + static_cast<std::ptrdiff_t>(off + basis.size()));
                    RM.entries[r][k] = detail::poly_from_coeffs(block, basis,
                                                                rels[k].degree - gens[r].degree, F);
                    off += basis.size();
                }
            }
            DenseMat img = RM.degree_matrix(d, nvars, F);
            rel_span = column_span({&img}, lcols, F);
        }
        for (const std::vector<uint32_t>& v : ker) {
            std::vector<uint32_t> proj(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lcols));
            bool zero = true;
            for (uint32_t x : proj) zero = zero && (x % F.p() == 0);
            if (zero) continue;
            std::vector<uint32_t> copy = proj;
            if (!rel_span.insert(std::move(copy), F)) continue;
            rels.push_back(Rel{d, proj, gens.size()});
        }
    }

    ExtPresentation out;
    std::vector<int> gt;
    for (const Gen& g : gens) gt.push_back(g.degree);
    std::vector<int> rt;
    for (const Rel& r : rels) rt.push_back(r.degree);
    out.pres.presentation = GradedMatrix(gt, rt);
    for (size_t k = 0; k < rels.size(); ++k) {
        size_t off = 0;
        for (size_t r = 0; r < rels[k].gen_count; ++r) {
            std::vector<Monomial> basis =
                monomials_of_degree(nvars, rels[k].degree - gens[r].degree);
            std::vector<uint32_t> block(
                rels[k].coords.begin() + static_cast<std::ptrdiff_t>(off),
                rels[k].coords.begin() + static_cast<std::ptrdiff_t>(off + basis.size()));
            out.pres.presentation.entries[r][k] =
                detail::poly_from_coeffs(block, basis, rels[k].degree - gens[r].degree, F);
            off += basis.size();
        }
    }
    std::vector<int> ct;
    for (const Gen& g : gens) ct.push_back(g.degree);
    out.lifts = GradedMatrix(amb_twists, ct);
    for (size_t k = 0; k < gens.size(); ++k) {
        size_t off = 0;
        for (size_t r = 0; r < amb_twists.size(); ++r) {
            std::vector<Monomial> basis =
                monomials_of_degree(nvars, gens[k].degree - amb_twists[r]);
            std::vector<uint32_t> block(
                gens[k].lift.begin() + static_cast<std::ptrdiff_t>(off),
                gens[k].lift.begin() + static_cast<std::ptrdiff_t>(off + basis.size()));
            out.lifts.entries[r][k] =
                detail::poly_from_coeffs(block, basis, gens[k].degree - amb_twists[r], F);
            off += basis.size();
        }
    }
    return out;
}

} // namespace surf10

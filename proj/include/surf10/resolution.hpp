#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "surf10/graded.hpp"
#include "surf10/groebner.hpp"
#include "surf10/span.hpp"

namespace surf10 {

namespace detail {

/// Column c of M as a coordinate vector at its own twist degree, blocked the
/// way GradedMatrix::degree_matrix blocks target rows.
inline std::vector<uint32_t> column_coords(const GradedMatrix& M, size_t c, int nvars) {
    int d = M.col_twists[c];
    std::vector<uint32_t> out;
    out.reserve(M.target_dim(d, nvars));
    for (size_t r = 0; r < M.rows(); ++r) {
        std::vector<Monomial> basis = monomials_of_degree(nvars, d - M.row_twists[r]);
        std::vector<uint32_t> block = dense_coeffs(M.entries[r][c], basis);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

} // namespace detail

/// Keep a minimal generating subset of M's columns, viewed as elements of the
/// free module on M's rows. Scans degrees in ascending order; a column is
/// dropped exactly when it lies in the submodule generated by the columns
/// kept so far (zero columns are always dropped).
inline GradedMatrix minimal_column_filter(const GradedMatrix& M, int nvars, const PrimeField& F) {
    std::vector<size_t> order(M.cols());
    for (size_t c = 0; c < order.size(); ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return M.col_twists[a] < M.col_twists[b]; });
    std::vector<size_t> kept;
    size_t pos = 0;
    while (pos < order.size()) {
        int d = M.col_twists[order[pos]];
        // span of all degree-d elements of the submodule generated by kept columns
        GradedMatrix K(M.row_twists, {});
        K.col_twists.reserve(kept.size());
        for (size_t c : kept) K.col_twists.push_back(M.col_twists[c]);
        for (size_t r = 0; r < M.rows(); ++r)
            for (size_t c : kept) K.entries[r].push_back(M.entries[r][c]);
        Span span(M.target_dim(d, nvars));
        if (!kept.empty()) {
            DenseMat img = K.degree_matrix(d, nvars, F);
            span = column_span({&img}, span.width(), F);
        }
        while (pos < order.size() && M.col_twists[order[pos]] == d) {
            if (span.insert(detail::column_coords(M, order[pos], nvars), F))
                kept.push_back(order[pos]);
            ++pos;
        }
    }
    std::sort(kept.begin(), kept.end());
    std::vector<int> ct;
    ct.reserve(kept.size());
    for (size_t c : kept) ct.push_back(M.col_twists[c]);
    GradedMatrix out(M.row_twists, ct);
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t k = 0; k < kept.size(); ++k) out.entries[r][k] = M.entries[r][kept[k]];
    return out;
}

/// Minimal generating subset of a list of homogeneous polynomials (as an ideal).
inline std::vector<HomogPoly> minimal_generators(const std::vector<HomogPoly>& gens, int nvars,
                                                 const PrimeField& F) {
    std::vector<HomogPoly> nz;
    for (const HomogPoly& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    std::vector<int> ct;
    ct.reserve(nz.size());
    for (const HomogPoly& g : nz) ct.push_back(g.degree());
    GradedMatrix M({0}, ct);
    for (size_t c = 0; c < nz.size(); ++c) M.entries[0][c] = nz[c];
    GradedMatrix kept = minimal_column_filter(M, nvars, F);
    return kept.entries.empty() ? std::vector<HomogPoly>{} : kept.entries[0];
}

/// Remove unit entries from a presentation matrix: each constant pivot lets
/// one generator be rewritten in terms of the others, deleting its row and
/// the pivot column. Iterates until no constant entry remains, so the result
/// presents the same module with a minimal generator set.
inline GradedMatrix minimize_presentation(GradedMatrix M, const PrimeField& F) {
    for (;;) {
        size_t pr = M.rows(), pc = M.cols();
        for (size_t r = 0; r < M.rows() && pr == M.rows(); ++r)
            for (size_t c = 0; c < M.cols(); ++c)
                if (!M.entries[r][c].is_zero() && M.entries[r][c].degree() == 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == M.rows()) return M;
        uint32_t uinv = F.inv(M.entries[pr][pc].leading_coeff());
        for (size_t c = 0; c < M.cols(); ++c) {
            if (c == pc || M.entries[pr][c].is_zero()) continue;
            HomogPoly q = M.entries[pr][c].scale(uinv, F);
            for (size_t r = 0; r < M.rows(); ++r) {
                // skip zero entries: at positions of negative degree their
                // declared degree is clamped to 0, and multiplying them would
                // trip the degree bookkeeping for no arithmetic effect
                if (M.entries[r][pc].is_zero()) continue;
                M.entries[r][c] = M.entries[r][c].sub(M.entries[r][pc].mul(q, F), F);
            }
        }
        M.row_twists.erase(M.row_twists.begin() + static_cast<std::ptrdiff_t>(pr));
        M.entries.erase(M.entries.begin() + static_cast<std::ptrdiff_t>(pr));
        M.col_twists.erase(M.col_twists.begin() + static_cast<std::ptrdiff_t>(pc));
        for (auto& row : M.entries) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pc));
    }
}

/// Minimal generators of ker(M) as columns of a new graded matrix (rows = M's
/// columns). Kernels are scanned degree by degree up to degree_bound; a kernel
/// vector becomes a generator exactly when it is independent of the monomial
/// multiples of the generators already found. The result is the next minimal
/// differential when M's columns are themselves a minimal generating set.
inline GradedMatrix graded_syzygies(const GradedMatrix& M, int nvars, const PrimeField& F,
                                    int degree_bound) {
    struct Gen {
        int degree;
        std::vector<HomogPoly> column;
    };
    std::vector<Gen> found;
    if (M.cols() == 0) return GradedMatrix(M.col_twists, {});
    int dmin = *std::min_element(M.col_twists.begin(), M.col_twists.end());
    for (int d = dmin; d <= degree_bound; ++d) {
        size_t src = M.source_dim(d, nvars);
        if (src == 0) continue;
        DenseMat A = M.degree_matrix(d, nvars, F);
        size_t kdim = src - A.rank(F);
        if (kdim == 0) continue;
        Span span(src);
        if (!found.empty()) {
            GradedMatrix G(M.col_twists, {});
            for (const Gen& g : found) G.col_twists.push_back(g.degree);
            for (size_t r = 0; r < M.cols(); ++r)
                for (const Gen& g : found) G.entries[r].push_back(g.column[r]);
            DenseMat img = G.degree_matrix(d, nvars, F);
            span = column_span({&img}, src, F);
            // The generator multiples always lie inside the kernel, so matching
            // dimensions mean the kernel carries nothing new at this degree and
            // the basis extraction can be skipped outright.
            if (span.dim() == kdim) continue;
        }
        std::vector<std::vector<uint32_t>> ker = A.kernel_basis(F);
        for (std::vector<uint32_t>& v : ker) {
            std::vector<uint32_t> copy = v;
            if (!span.insert(std::move(copy), F)) continue;
            Gen g;
            g.degree = d;
            size_t off = 0;
            for (size_t j = 0; j < M.cols(); ++j) {
                std::vector<Monomial> basis = monomials_of_degree(nvars, d - M.col_twists[j]);
                std::vector<uint32_t> block(v.begin() + static_cast<std::ptrdiff_t>(off),
                                            v.begin() + static_cast<std::ptrdiff_t>(off + basis.size()));
                g.column.push_back(
                    detail::poly_from_coeffs(block, basis, d - M.col_twists[j], F));
                off += basis.size();
            }
            found.push_back(std::move(g));
        }
    }
    std::vector<int> ct;
    ct.reserve(found.size());
    for (const Gen& g : found) ct.push_back(g.degree);
    GradedMatrix out(M.col_twists, ct);
    for (size_t r = 0; r < M.cols(); ++r)
        for (size_t k = 0; k < found.size(); ++k) out.entries[r][k] = found[k].column[r];
    return out;
}

/// Minimal free resolution of R/I. degree_bound caps the internal degree
/// scanned for syzygies at every step and must dominate the regularity of the
/// actual resolution (the top internal degree of the last step); too small a
/// bound silently truncates, which the caller can detect by checking the
/// alternating-sum identity against an independently computed Hilbert
/// numerator. length_bound < nvars raises "increase bounds" if the resolution
/// does not in fact stop there.
inline FreeResolution minimal_resolution_of_quotient(const Ideal& I, const PrimeField& F,
                                                     int degree_bound, int length_bound = -1) {
    int nvars = I.nvars();
    int cap = length_bound < 0 ? nvars : length_bound;
    FreeResolution res;
    res.f0_twists = {0};
    std::vector<HomogPoly> gens = minimal_generators(I.gens(), nvars, F);
    if (gens.empty()) return res;
    std::vector<int> ct;
    ct.reserve(gens.size());
    for (const HomogPoly& g : gens) ct.push_back(g.degree());
    GradedMatrix d1({0}, ct);
    for (size_t c = 0; c < gens.size(); ++c) d1.entries[0][c] = gens[c];
    res.diffs.push_back(std::move(d1));
    while (static_cast<int>(res.length()) < cap) {
        GradedMatrix s = graded_syzygies(res.diffs.back(), nvars, F, degree_bound);
        if (s.cols() == 0) break;
        res.diffs.push_back(std::move(s));
    }
    if (static_cast<int>(res.length()) == cap && cap < nvars &&
        graded_syzygies(res.diffs.back(), nvars, F, degree_bound).cols() != 0)
        throw std::out_of_range("resolve: increase bounds (length)");
    return res;
}

/// Minimal free resolution of the cokernel of a graded presentation matrix.
/// The presentation is first reduced to minimal generators and minimal
/// relations, so the input matrix itself need not be minimal.
inline FreeResolution minimal_resolution_of_module(const GradedModulePresentation& P, int nvars,
                                                   const PrimeField& F, int degree_bound,
                                                   int length_bound = -1) {
    int cap = length_bound < 0 ? nvars : length_bound;
    GradedMatrix pres = minimize_presentation(P.presentation, F);
    pres = minimal_column_filter(pres, nvars, F);
    FreeResolution res;
    res.f0_twists = pres.row_twists;
    if (pres.cols() == 0 || pres.rows() == 0) return res;
    res.diffs.push_back(std::move(pres));
    while (static_cast<int>(res.length()) < cap) {
        GradedMatrix s = graded_syzygies(res.diffs.back(), nvars, F, degree_bound);
        if (s.cols() == 0) break;
        res.diffs.push_back(std::move(s));
    }
    if (static_cast<int>(res.length()) == cap && cap < nvars &&
        graded_syzygies(res.diffs.back(), nvars, F, degree_bound).cols() != 0)
        throw std::out_of_range("resolve: increase bounds (length)");
    return res;
}

} // namespace surf10

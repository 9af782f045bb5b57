#pragma once

#include <map>
#include <utility>
#include <vector>

#include "surf10/graded.hpp"
#include "surf10/quotient.hpp"

namespace surf10 {

/// A graded module a homomorphism can land in: graded dimensions plus the
/// matrix of multiplication by any form, in fixed per-degree coordinates.
class HomTarget {
public:
    virtual ~HomTarget() = default;
    virtual const PrimeField& field() const = 0;
    /// dim of the degree-d piece (0 for d < 0).
    virtual size_t dim(int d) const = 0;
    /// dim(from_deg + deg f) x dim(from_deg) matrix of multiplication by f.
    virtual DenseMat act_matrix(const HomogPoly& f, int from_deg) const = 0;
};

/// A quotient ring R/I as a hom target.
class QuotientTarget final : public HomTarget {
public:
    explicit QuotientTarget(const QuotientRing& q) : q_(q) {}
    const PrimeField& field() const override { return q_.field(); }
    size_t dim(int d) const override { return d < 0 ? 0 : q_.dim(d); }
    DenseMat act_matrix(const HomogPoly& f, int from_deg) const override {
        if (from_deg < 0) return DenseMat(dim(from_deg + f.degree()), 0);
        return q_.poly_mult(f, from_deg);
    }

private:
    const QuotientRing& q_;
};

/// The submodule of a quotient ring generated by the residue classes of the
/// given forms. Per-degree coordinates come from a row-reduced basis of the
/// span of all monomial multiples of the generators; multiplication is
/// computed in the ambient ring and re-expressed in that basis.
class SubmoduleTarget final : public HomTarget {
public:
    SubmoduleTarget(const QuotientRing& q, std::vector<HomogPoly> gens)
        : q_(q), gens_(std::move(gens)) {}

    const PrimeField& field() const override { return q_.field(); }

    size_t dim(int d) const override { return layer(d).mat.rows(); }

    DenseMat act_matrix(const HomogPoly& f, int from_deg) const override {
        const Layer& from = layer(from_deg);
        const Layer& to = layer(from_deg + f.degree());
        DenseMat out(to.mat.rows(), from.mat.rows());
        if (from.mat.rows() == 0 || to.mat.rows() == 0) return out;
        DenseMat mult = q_.poly_mult(f, from_deg);
        const PrimeField& F = q_.field();
        for (size_t j = 0; j < from.mat.rows(); ++j) {
            std::vector<uint32_t> v(from.mat.cols());
            for (size_t k = 0; k < v.size(); ++k) v[k] = from.mat.get(j, k, F);
            std::vector<uint32_t> w = mult.apply(F, v);
            // submodule coordinates = values at the pivot columns of the
            // reduced basis; verify the residual is zero (closure check)
            std::vector<uint32_t> coords(to.mat.rows());
            for (size_t i = 0; i < to.mat.rows(); ++i) coords[i] = w[to.pivots[i]];
            std::vector<uint32_t> back(w.size(), 0);
            for (size_t i = 0; i < to.mat.rows(); ++i)
                for (size_t k = 0; k < w.size(); ++k)
                    back[k] = static_cast<uint32_t>(
                        (back[k] + static_cast<uint64_t>(coords[i]) * to.mat.get(i, k, F)) %
                        F.p());
            for (size_t k = 0; k < w.size(); ++k)
                if (back[k] != w[k])
                    throw std::logic_error("submodule target: product left the submodule");
            for (size_t i = 0; i < to.mat.rows(); ++i)
                if (coords[i] != 0) out.set(i, j, coords[i]);
        }
        return out;
    }

    /// Ambient quotient-ring coordinates of the degree-d basis (rows).
    const DenseMat& ambient_basis(int d) const { return layer(d).mat; }

private:
    struct Layer {
        DenseMat mat{0, 0};  // RREF rows spanning the degree-d piece
        std::vector<size_t> pivots;
    };

    const Layer& layer(int d) const {
        auto it = layers_.find(d);
        if (it != layers_.end()) return it->second;
        Layer l;
        if (d >= 0) {
            size_t amb = q_.dim(d);
            std::vector<std::vector<uint32_t>> rows;
            for (const HomogPoly& g : gens_) {
                if (g.is_zero() || g.degree() > d) continue;
                for (const Monomial& m : monomials_of_degree(q_.nvars(), d - g.degree())) {
                    HomogPoly prod = g.mul_term(m, 1, q_.field());
                    rows.push_back(q_.nf(prod));
                }
            }
            DenseMat all(rows.size(), amb);
            for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < amb; ++c)
                    if (rows[r][c] != 0) all.set(r, c, rows[r][c]);
            RowReduceResult rr = row_reduce(all, q_.field());
            l.mat = DenseMat(rr.rank, amb);
            for (size_t r = 0; r < rr.rank; ++r)
                for (size_t c = 0; c < amb; ++c) {
                    uint32_t x = rr.reduced.get(r, c, q_.field());
                    if (x != 0) l.mat.set(r, c, x);
                }
            l.pivots.assign(rr.pivot_cols.begin(), rr.pivot_cols.begin() + rr.rank);
        }
        return layers_.emplace(d, std::move(l)).first->second;
    }

    const QuotientRing& q_;
    std::vector<HomogPoly> gens_;
    mutable std::map<int, Layer> layers_;
};

/// Basis of the space of degree-t homomorphisms from the cokernel of a graded
/// presentation into a target module. A homomorphism is stored as the
/// concatenated target coordinates of the generator images; offsets() gives
/// the per-generator slices.
struct HomSpace {
    int t = 0;
    std::vector<int> gen_twists;
    std::vector<size_t> offsets;  // size gens+1; image of gen r at [offsets[r], offsets[r+1])
    std::vector<std::vector<uint32_t>> basis;

    size_t dim() const { return basis.size(); }

    std::vector<uint32_t> image_of_gen(const std::vector<uint32_t>& hom, size_t r) const {
        return std::vector<uint32_t>(hom.begin() + static_cast<std::ptrdiff_t>(offsets[r]),
                                     hom.begin() + static_cast<std::ptrdiff_t>(offsets[r + 1]));
    }
};

/// Solve for all degree-t maps coker(P) -> T: unknowns are generator images
/// in T, constraints say every relation column maps to zero.
inline HomSpace hom_space(const GradedModulePresentation& P, const HomTarget& T, int t) {
    const PrimeField& F = T.field();
    const std::vector<int>& gt = P.gen_twists();
    const std::vector<int>& ct = P.rel_twists();
    HomSpace out;
    out.t = t;
    out.gen_twists = gt;
    out.offsets.assign(gt.size() + 1, 0);
    for (size_t r = 0; r < gt.size(); ++r)
        out.offsets[r + 1] = out.offsets[r] + T.dim(gt[r] + t);
    size_t unknowns = out.offsets.back();
    std::vector<size_t> row_off(ct.size() + 1, 0);
    for (size_t j = 0; j < ct.size(); ++j) row_off[j + 1] = row_off[j] + T.dim(ct[j] + t);
    DenseMat E(row_off.back(), unknowns);
    for (size_t j = 0; j < ct.size(); ++j) {
        size_t h = row_off[j + 1] - row_off[j];
        if (h == 0) continue;
        for (size_t r = 0; r < gt.size(); ++r) {
            const HomogPoly& e = P.presentation.entries[r][j];
            if (e.is_zero()) continue;
            size_t w = out.offsets[r + 1] - out.offsets[r];
            if (w == 0) continue;
            DenseMat act = T.act_matrix(e, gt[r] + t);
            for (size_t a = 0; a < h; ++a)
                for (size_t b = 0; b < w; ++b) {
                    uint32_t x = act.get(a, b, F);
                    if (x != 0) E.add_at(row_off[j] + a, out.offsets[r] + b, x, F);
                }
        }
    }
    out.basis = E.kernel_basis(F);
    return out;
}

} // namespace surf10

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "surf10/betti.hpp"
#include "surf10/quotient.hpp"
#include "surf10/span.hpp"

namespace surf10 {

/// Coefficients for Koszul homology: a graded module presented through the
/// dimensions of its graded pieces and the multiplication action of the
/// variables. Graded Betti numbers are read off from ranks of the Koszul
/// strand maps, one internal degree at a time.
class KoszulCoefficients {
public:
    virtual ~KoszulCoefficients() = default;
    virtual const PrimeField& field() const = 0;
    virtual int nvars() const = 0;
    virtual size_t dim(int d) const = 0;  // 0 for d < 0
    /// dim(d+1) x dim(d) matrix of multiplication by x_v.
    virtual DenseMat var_mult(int v, int d) const = 0;
};

/// R/I as Koszul coefficients.
class QuotientCoefficients final : public KoszulCoefficients {
public:
    explicit QuotientCoefficients(const QuotientRing& q) : q_(q) {}
    const PrimeField& field() const override { return q_.field(); }
    int nvars() const override { return q_.nvars(); }
    size_t dim(int d) const override {
        if (d < 0) return 0;
        if (d > q_.dmax())
            throw std::out_of_range("koszul: increase bounds (quotient ring degree cap)");
        return q_.dim(d);
    }
    DenseMat var_mult(int v, int d) const override { return q_.var_mult(v, d); }

private:
    const QuotientRing& q_;
};

/// coker of a graded presentation matrix over the polynomial ring, as Koszul
/// coefficients. The degree-d piece is coordinatized by the non-pivot
/// positions of the reduced image span inside ⊕_r R_{d - gen_twist_r}.
class CokerCoefficients final : public KoszulCoefficients {
public:
    CokerCoefficients(GradedModulePresentation pres, int nvars, const PrimeField& F)
        : pres_(std::move(pres)), nvars_(nvars), F_(F) {}

    const PrimeField& field() const override { return F_; }
    int nvars() const override { return nvars_; }

    size_t dim(int d) const override {
        if (ambient_dim(d) == 0) return 0;
        return layer(d).free_positions.size();
    }

    DenseMat var_mult(int v, int d) const override {
        const Layer& from = layer(d);
        const Layer& to = layer(d + 1);
        DenseMat m(to.free_positions.size(), from.free_positions.size());
        for (size_t j = 0; j < from.free_positions.size(); ++j) {
            std::vector<uint32_t> full(ambient_dim(d), 0);
            full[from.free_positions[j]] = 1;
            std::vector<uint32_t> moved = shift_by_variable(full, v, d);
            to.image.reduce(moved, F_);
            for (size_t i = 0; i < to.free_positions.size(); ++i)
                if (moved[to.free_positions[i]] != 0) m.set(i, j, moved[to.free_positions[i]]);
        }
        return m;
    }

    /// Coordinates of an ambient vector in the quotient basis.
    std::vector<uint32_t> project(std::vector<uint32_t> full, int d) const {
        const Layer& l = layer(d);
        l.image.reduce(full, F_);
        std::vector<uint32_t> out(l.free_positions.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = full[l.free_positions[i]];
        return out;
    }

private:
    struct Layer {
        Span image{0};
        std::vector<size_t> free_positions;
    };

    size_t ambient_dim(int d) const {
        size_t n = 0;
        for (int t : pres_.gen_twists()) n += static_cast<size_t>(dim_forms(nvars_, d - t));
        return n;
    }

    /// Ambient coordinates are blocked by generator, monomials of degree
    /// d - twist_r in descending order within each block.
    std::vector<uint32_t> shift_by_variable(const std::vector<uint32_t>& full, int v, int d) const {
        std::vector<uint32_t> out(ambient_dim(d + 1), 0);
        size_t off_from = 0, off_to = 0;
        Monomial x = Monomial::variable(v);
        for (int t : pres_.gen_twists()) {
            std::vector<Monomial> from = monomials_of_degree(nvars_, d - t);
            std::vector<Monomial> to = monomials_of_degree(nvars_, d + 1 - t);
            for (size_t k = 0; k < from.size(); ++k)
                if (full[off_from + k] != 0)
                    out[off_to + monomial_index(to, from[k] * x)] = full[off_from + k];
            off_from += from.size();
            off_to += to.size();
        }
        return out;
    }

    const Layer& layer(int d) const {
        auto it = layers_.find(d);
        if (it != layers_.end()) return it->second;
        Layer l;
        size_t amb = ambient_dim(d);
        l.image = Span(amb);
        if (amb > 0) {
            DenseMat dm = pres_.presentation.degree_matrix(d, nvars_, F_);
            l.image = column_span({&dm}, amb, F_);
        }
        for (size_t j = 0; j < amb; ++j)
            if (!l.image.has_pivot(j)) l.free_positions.push_back(j);
        return layers_.emplace(d, std::move(l)).first->second;
    }

    GradedModulePresentation pres_;
    int nvars_;
    PrimeField F_;
    mutable std::map<int, Layer> layers_;
};

namespace detail {

inline std::vector<uint32_t> subset_masks(int n, int k) {
    std::vector<uint32_t> out;
    if (k < 0 || k > n) return out;
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == k) out.push_back(m);
    return out;
}

} // namespace detail

/// Rank of the Koszul strand map Λ^i V ⊗ M_{J-i} -> Λ^{i-1} V ⊗ M_{J-i+1}
/// at internal degree J, with ∂(e_S ⊗ m) = Σ_k (-1)^{k+1} e_{S\{j_k}} ⊗ x_{j_k} m
/// for S = {j_1 < ... < j_i}.
inline size_t koszul_strand_rank(const KoszulCoefficients& M, int i, int J) {
    const PrimeField& F = M.field();
    int n = M.nvars();
    if (i <= 0 || i > n) return 0;
    size_t dim_src = M.dim(J - i), dim_tgt = M.dim(J - i + 1);
    if (dim_src == 0 || dim_tgt == 0) return 0;
    std::vector<uint32_t> src_masks = detail::subset_masks(n, i);
    std::vector<uint32_t> tgt_masks = detail::subset_masks(n, i - 1);
    std::map<uint32_t, size_t> tgt_index;
    for (size_t t = 0; t < tgt_masks.size(); ++t) tgt_index[tgt_masks[t]] = t;
    std::vector<DenseMat> mult;
    mult.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) mult.push_back(M.var_mult(v, J - i));
    DenseMat A(tgt_masks.size() * dim_tgt, src_masks.size() * dim_src);
    for (size_t s = 0; s < src_masks.size(); ++s) {
        uint32_t mask = src_masks[s];
        for (int v = 0; v < n; ++v) {
            if ((mask & (1u << v)) == 0) continue;
            size_t tblock = tgt_index[mask & ~(1u << v)];
            int below = __builtin_popcount(mask & ((1u << v) - 1));
            bool negate = (below % 2) != 0;  // (-1)^{k+1} with k = below + 1
            const DenseMat& mm = mult[static_cast<size_t>(v)];
            for (size_t c = 0; c < dim_src; ++c)
                for (size_t r = 0; r < dim_tgt; ++r) {
                    uint32_t val = mm.get(r, c, F);
                    if (val == 0) continue;
                    A.set(tblock * dim_tgt + r, s * dim_src + c, negate ? F.neg(val) : val);
                }
        }
    }
    return A.rank(F);
}

/// β_{i,J} = dim(Λ^i V ⊗ M_{J-i}) - rank ∂_i - rank ∂_{i+1}, strand degree J.
inline int64_t koszul_betti_number(const KoszulCoefficients& M, int i, int J) {
    int n = M.nvars();
    if (i < 0 || i > n) return 0;
    int64_t middle = static_cast<int64_t>(binomial(n, i)) * static_cast<int64_t>(M.dim(J - i));
    if (middle == 0) return 0;
    int64_t r_in = static_cast<int64_t>(koszul_strand_rank(M, i, J));
    int64_t r_out = static_cast<int64_t>(koszul_strand_rank(M, i + 1, J));
    return middle - r_in - r_out;
}

/// Full Betti table over homological degrees 0..i_max and internal degrees
/// 0..j_max, sharing strand ranks between adjacent homological degrees.
inline BettiTable betti_via_koszul(const KoszulCoefficients& M, int i_max, int j_max) {
    BettiTable table;
    int n = M.nvars();
    i_max = std::min(i_max, n);
    for (int J = 0; J <= j_max; ++J) {
        std::vector<size_t> ranks(static_cast<size_t>(i_max) + 2, 0);
        for (int i = 1; i <= i_max + 1; ++i)
            ranks[static_cast<size_t>(i)] = koszul_strand_rank(M, i, J);
        for (int i = 0; i <= i_max; ++i) {
            int64_t middle =
                static_cast<int64_t>(binomial(n, i)) * static_cast<int64_t>(M.dim(J - i));
            int64_t beta = middle - static_cast<int64_t>(ranks[static_cast<size_t>(i)]) -
                           static_cast<int64_t>(ranks[static_cast<size_t>(i + 1)]);
            if (beta != 0) table.add(i, J, beta);
        }
    }
    return table;
}

/// Betti table of R/I over the same window, driven entirely by quotient-ring
/// multiplication tables — no syzygy computation, so it serves as an
/// independent cross-check of resolution-based tables.
inline BettiTable betti_via_koszul(const Ideal& I, const PrimeField& F, int i_max, int j_max) {
    QuotientRing Q(I, F, j_max);
    QuotientCoefficients coeffs(Q);
    return betti_via_koszul(coeffs, i_max, j_max);
}

} // namespace surf10

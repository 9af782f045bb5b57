#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "surf10/matrix.hpp"
#include "surf10/polynomial.hpp"
#include "surf10/util.hpp"

namespace surf10 {

/// Matrix of a graded map between free modules F_source -> F_target, written
/// so that columns correspond to source generators: source = ⊕_c R(-col_twists[c]),
/// target = ⊕_r R(-row_twists[r]), and every nonzero entry[r][c] is homogeneous
/// of degree col_twists[c] - row_twists[r].
struct GradedMatrix {
    std::vector<int> row_twists, col_twists;
    std::vector<std::vector<HomogPoly>> entries;  // [row][col]

    GradedMatrix() = default;

    GradedMatrix(std::vector<int> rt, std::vector<int> ct)
        : row_twists(std::move(rt)), col_twists(std::move(ct)) {
        entries.assign(row_twists.size(), {});
        for (auto& row : entries) {
            row.reserve(col_twists.size());
            for (size_t c = 0; c < col_twists.size(); ++c) row.emplace_back();
        }
        for (size_t r = 0; r < row_twists.size(); ++r)
            for (size_t c = 0; c < col_twists.size(); ++c)
                entries[r][c] = HomogPoly(std::max(0, col_twists[c] - row_twists[r]));
    }

    size_t rows() const { return row_twists.size(); }
    size_t cols() const { return col_twists.size(); }

    int entry_degree(size_t r, size_t c) const { return col_twists[c] - row_twists[r]; }

    void set(size_t r, size_t c, HomogPoly f) {
        if (!f.is_zero() && f.degree() != entry_degree(r, c))
            throw std::invalid_argument("graded matrix: entry degree mismatch");
        entries[r][c] = std::move(f);
    }

    /// Every nonzero entry has exactly the prescribed degree.
    bool degrees_consistent() const {
        for (size_t r = 0; r < rows(); ++r)
            for (size_t c = 0; c < cols(); ++c)
                if (!entries[r][c].is_zero() && entries[r][c].degree() != entry_degree(r, c))
                    return false;
        return true;
    }

    bool has_constant_entry() const {
        for (size_t r = 0; r < rows(); ++r)
            for (size_t c = 0; c < cols(); ++c)
                if (!entries[r][c].is_zero() && entries[r][c].degree() == 0) return true;
        return false;
    }

    /// Matrix product this * other (composition: other's columns mapped through).
    GradedMatrix compose(const GradedMatrix& other, const PrimeField& F) const {
        if (col_twists != other.row_twists)
            throw std::invalid_argument("graded matrix: composition twist mismatch");
        GradedMatrix out(row_twists, other.col_twists);
        for (size_t r = 0; r < rows(); ++r)
            for (size_t c = 0; c < other.cols(); ++c) {
                HomogPoly acc(std::max(0, other.col_twists[c] - row_twists[r]));
                for (size_t k = 0; k < cols(); ++k) {
                    if (entries[r][k].is_zero() || other.entries[k][c].is_zero()) continue;
                    acc = acc.add(entries[r][k].mul(other.entries[k][c], F), F);
                }
                out.entries[r][c] = std::move(acc);
            }
        return out;
    }

    bool is_zero() const {
        for (const auto& row : entries)
            for (const HomogPoly& e : row)
                if (!e.is_zero()) return false;
        return true;
    }

    /// The map on degree-d parts in monomial coordinates. Row index blocks by
    /// target summand (then descending-grevlex monomials of degree
    /// d - row_twists[r]); columns likewise for the source. Summands with
    /// negative residual degree contribute empty blocks.
    DenseMat degree_matrix(int d, int nvars, const PrimeField& F) const {
        std::vector<std::vector<Monomial>> row_basis(rows()), col_basis(cols());
        std::vector<size_t> row_off(rows() + 1, 0), col_off(cols() + 1, 0);
        for (size_t r = 0; r < rows(); ++r) {
            row_basis[r] = monomials_of_degree(nvars, d - row_twists[r]);
            row_off[r + 1] = row_off[r] + row_basis[r].size();
        }
        for (size_t c = 0; c < cols(); ++c) {
            col_basis[c] = monomials_of_degree(nvars, d - col_twists[c]);
            col_off[c + 1] = col_off[c] + col_basis[c].size();
        }
        DenseMat m(row_off[rows()], col_off[cols()]);
        for (size_t c = 0; c < cols(); ++c) {
            for (size_t cm = 0; cm < col_basis[c].size(); ++cm) {
                size_t col = col_off[c] + cm;
                const Monomial& mu = col_basis[c][cm];
                for (size_t r = 0; r < rows(); ++r) {
                    const HomogPoly& e = entries[r][c];
                    if (e.is_zero()) continue;
                    for (const Term& t : e.terms()) {
                        size_t row = row_off[r] + monomial_index(row_basis[r], t.m * mu);
                        m.add_at(row, col, t.c, F);
                    }
                }
            }
        }
        return m;
    }

    /// Sizes of the degree-d coordinate blocks.
    size_t source_dim(int d, int nvars) const {
        size_t n = 0;
        for (int t : col_twists) n += static_cast<size_t>(dim_forms(nvars, d - t));
        return n;
    }
    size_t target_dim(int d, int nvars) const {
        size_t n = 0;
        for (int t : row_twists) n += static_cast<size_t>(dim_forms(nvars, d - t));
        return n;
    }
};

/// Presentation of a graded module: generators = row twists, relations =
/// columns of the matrix.
struct GradedModulePresentation {
    GradedMatrix presentation;

    const std::vector<int>& gen_twists() const { return presentation.row_twists; }
    const std::vector<int>& rel_twists() const { return presentation.col_twists; }
};

/// A chain of differentials F_1 -> F_0, F_2 -> F_1, ... with F_0's twists kept
/// explicitly (diffs may be empty for a free module).
struct FreeResolution {
    std::vector<int> f0_twists;
    std::vector<GradedMatrix> diffs;  // diffs[k]: F_{k+1} -> F_k

    size_t length() const { return diffs.size(); }

    const std::vector<int>& twists_at(size_t i) const {
        if (i == 0) return f0_twists;
        return diffs[i - 1].col_twists;
    }

    bool is_minimal() const {
        for (const GradedMatrix& d : diffs)
            if (d.has_constant_entry()) return false;
        return true;
    }

    /// Consecutive products vanish (entry-wise check).
    bool is_complex(const PrimeField& F) const {
        for (size_t i = 0; i + 1 < diffs.size(); ++i)
            if (!diffs[i].compose(diffs[i + 1], F).is_zero()) return false;
        return true;
    }
};

} // namespace surf10

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "surf10/field.hpp"
#include "surf10/matrix.hpp"

namespace surf10 {

/// Incrementally maintained row space in reduced echelon form: reduce a
/// vector to its canonical normal form against the space, or insert its
/// residual. Rows stay fully reduced; pivots are 1; entries above and below
/// pivots are cleared, so reduce() is a canonical projection.
class Span {
public:
    explicit Span(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    size_t dim() const { return rows_.size(); }
    bool has_pivot(size_t col) const { return rows_.count(col) != 0; }

    /// Subtract the projection onto the span; v becomes the canonical residual.
    void reduce(std::vector<uint32_t>& v, const PrimeField& F) const {
        if (v.size() != width_) throw std::invalid_argument("span: width mismatch");
        for (const auto& [pc, row] : rows_) {
            uint32_t f = v[pc] % F.p();
            if (f == 0) continue;
            uint32_t m = F.neg(f);
            for (size_t j = pc; j < width_; ++j)
                if (row[j] != 0) v[j] = static_cast<uint32_t>((v[j] + static_cast<uint64_t>(m) * row[j]) % F.p());
        }
    }

    bool contains(std::vector<uint32_t> v, const PrimeField& F) const {
        reduce(v, F);
        for (uint32_t x : v)
            if (x % F.p() != 0) return false;
        return true;
    }

    /// Reduce v and, if a nonzero residual remains, insert it (normalized,
    /// with back-substitution into the existing rows). Returns true when the
    /// dimension grew.
    bool insert(std::vector<uint32_t> v, const PrimeField& F) {
        for (uint32_t& x : v) x %= F.p();
        reduce(v, F);
        size_t pc = width_;
        for (size_t j = 0; j < width_; ++j)
            if (v[j] != 0) { pc = j; break; }
        if (pc == width_) return false;
        uint32_t inv = F.inv(v[pc]);
        if (inv != 1)
            for (size_t j = pc; j < width_; ++j)
                v[j] = F.mul(v[j], inv);
        // Clear column pc in the existing rows to keep reduce() canonical.
        for (auto& [opc, row] : rows_) {
            uint32_t f = row[pc];
            if (f == 0) continue;
            uint32_t m = F.neg(f);
            for (size_t j = pc; j < width_; ++j)
                if (v[j] != 0) row[j] = static_cast<uint32_t>((row[j] + static_cast<uint64_t>(m) * v[j]) % F.p());
        }
        rows_.emplace(pc, std::move(v));
        return true;
    }

    /// Bulk-adopt rows that are already in reduced echelon form (as produced
    /// by DenseMat::echelonize with full = true): row i has unit pivot at
    /// m.pivot_cols()[i] and is reduced against every other row, so the rows
    /// can be stored directly without another elimination pass.
    void adopt_rref(const DenseMat& m, const PrimeField& F) {
        if (m.cols() != width_) throw std::invalid_argument("span: width mismatch");
        if (dim() != 0) throw std::logic_error("span: adopt_rref requires an empty span");
        const std::vector<size_t>& piv = m.pivot_cols();
        for (size_t i = 0; i < piv.size(); ++i) {
            std::vector<uint32_t> row(width_);
            for (size_t j = piv[i]; j < width_; ++j) row[j] = m.get(i, j, F);
            rows_.emplace(piv[i], std::move(row));
        }
    }

private:
    size_t width_;
    std::map<size_t, std::vector<uint32_t>> rows_;  // pivot column -> row
};

/// Span of the columns of several stacked matrices (each with `width` rows),
/// built with a single echelonization instead of one insert per column.
inline Span column_span(const std::vector<const DenseMat*>& mats, size_t width,
                        const PrimeField& F) {
    size_t total = 0;
    for (const DenseMat* m : mats) {
        if (m->rows() != width) throw std::invalid_argument("column_span: height mismatch");
        total += m->cols();
    }
    DenseMat t(total, width);
    size_t r = 0;
    for (const DenseMat* m : mats)
        for (size_t c = 0; c < m->cols(); ++c, ++r)
            for (size_t i = 0; i < width; ++i) {
                uint32_t v = m->get(i, c, F);
                if (v != 0) t.set(r, i, v);
            }
    t.echelonize(F, true);
    Span s(width);
    s.adopt_rref(t, F);
    return s;
}

} // namespace surf10

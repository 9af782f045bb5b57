#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "surf10/field.hpp"

namespace surf10 {

/// Dense matrix over F_p with Gaussian elimination tuned for the repeated
/// medium-size reductions this engine lives on.
///
/// Entries are stored as uint64_t residue representatives (not necessarily
/// reduced). For p < 2^15 the eliminator keeps pivot rows reduced and lets the
/// other rows accumulate: one update adds m*src < 2^30 per entry, so billions
/// of updates fit in 64 bits before any modulo is needed. For larger p every
/// update reduces. All reads go through get(), which reduces.
class DenseMat {
public:
    DenseMat() = default;

    DenseMat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    void set(size_t i, size_t j, uint32_t v) { a_[i * c_ + j] = v; }

    void add_at(size_t i, size_t j, uint32_t v, const PrimeField& F) {
        uint64_t& e = a_[i * c_ + j];
        e = (e + v) % F.p();
    }

    uint32_t get(size_t i, size_t j, const PrimeField& F) const {
        return static_cast<uint32_t>(a_[i * c_ + j] % F.p());
    }

    /// In-place reduction to (reduced) row echelon form. Returns the rank and
    /// records the pivot columns. Deterministic: pivot = first row (from the
    /// top of the unfinished block) with a nonzero entry in the leftmost
    /// eligible column. After the call every entry is reduced, pivots are 1,
    /// and with full=true entries above pivots are cleared as well.
    size_t echelonize(const PrimeField& F, bool full) {
        pivots_.clear();
        const uint64_t p = F.p();
        const bool lazy = F.small();
        size_t rank = 0;
        for (size_t col = 0; col < c_ && rank < r_; ++col) {
            size_t sel = r_;
            for (size_t i = rank; i < r_; ++i) {
                if (a_[i * c_ + col] % p != 0) {
                    sel = i;
                    break;
                }
            }
            if (sel == r_) continue;
            if (sel != rank)
                for (size_t k = col; k < c_; ++k)
                    std::swap(a_[sel * c_ + k], a_[rank * c_ + k]);
            uint64_t* pr = &a_[rank * c_];
            // Reduce the pivot row and normalize it to a leading 1.
            for (size_t k = col; k < c_; ++k) pr[k] %= p;
            uint64_t piv_inv = F.inv(static_cast<uint32_t>(pr[col]));
            if (piv_inv != 1)
                for (size_t k = col; k < c_; ++k) pr[k] = pr[k] * piv_inv % p;
            size_t lo = full ? 0 : rank + 1;
            for (size_t i = lo; i < r_; ++i) {
                if (i == rank) continue;
                uint64_t* ri = &a_[i * c_];
                uint64_t f = ri[col] % p;
                if (f == 0) {
                    ri[col] = 0;
                    continue;
                }
                uint64_t m = p - f;  // add m * pivot row == subtract f * pivot row
                if (lazy) {
                    for (size_t k = col; k < c_; ++k) ri[k] += m * pr[k];
                } else {
                    for (size_t k = col; k < c_; ++k) ri[k] = (ri[k] + m * pr[k]) % p;
                }
                ri[col] = 0;
            }
            pivots_.push_back(col);
            ++rank;
        }
        for (uint64_t& e : a_) e %= p;
        return rank;
    }

    const std::vector<size_t>& pivot_cols() const { return pivots_; }

    size_t rank(const PrimeField& F) const {
        DenseMat tmp(*this);
        return tmp.echelonize(F, false);
    }

    /// Basis of the right kernel {v : A v = 0}, one vector per non-pivot
    /// column in ascending column order (deterministic).
    std::vector<std::vector<uint32_t>> kernel_basis(const PrimeField& F) const {
        DenseMat m(*this);
        size_t rank = m.echelonize(F, true);
        std::vector<bool> is_pivot(c_, false);
        for (size_t pc : m.pivots_) is_pivot[pc] = true;
        std::vector<std::vector<uint32_t>> out;
        out.reserve(c_ - rank);
        for (size_t fc = 0; fc < c_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<uint32_t> v(c_, 0);
            v[fc] = 1;
            for (size_t i = 0; i < rank; ++i) {
                uint32_t e = m.get(i, fc, F);
                if (e != 0) v[m.pivots_[i]] = F.neg(e);
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    size_t nullity(const PrimeField& F) const { return c_ - rank(F); }

    /// One solution of A x = rhs (free variables set to 0), or nullopt when
    /// the system is inconsistent.
    std::optional<std::vector<uint32_t>> solve(const PrimeField& F,
                                               const std::vector<uint32_t>& rhs) const {
        if (rhs.size() != r_) throw std::invalid_argument("solve: rhs size mismatch");
        DenseMat aug(r_, c_ + 1);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) aug.a_[i * (c_ + 1) + j] = a_[i * c_ + j];
            aug.a_[i * (c_ + 1) + c_] = rhs[i];
        }
        size_t rank = aug.echelonize(F, true);
        std::vector<uint32_t> x(c_, 0);
        for (size_t i = 0; i < rank; ++i) {
            size_t pc = aug.pivots_[i];
            if (pc == c_) return std::nullopt;  // pivot in the rhs column
            x[pc] = aug.get(i, c_, F);
        }
        return x;
    }

    /// A * v for a reduced vector v.
    std::vector<uint32_t> apply(const PrimeField& F, const std::vector<uint32_t>& v) const {
        if (v.size() != c_) throw std::invalid_argument("apply: size mismatch");
        const uint64_t p = F.p();
        std::vector<uint32_t> out(r_, 0);
        for (size_t i = 0; i < r_; ++i) {
            const uint64_t* row = &a_[i * c_];
            uint64_t acc = 0;
            for (size_t j = 0; j < c_; ++j) {
                if (v[j] == 0) continue;
                acc = (acc + (row[j] % p) * v[j]) % p;
            }
            out[i] = static_cast<uint32_t>(acc);
        }
        return out;
    }

    DenseMat transposed() const {
        DenseMat t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t.a_[j * r_ + i] = a_[i * c_ + j];
        return t;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<uint64_t> a_;
    std::vector<size_t> pivots_;
};

struct RowReduceResult {
    size_t rank = 0;
    DenseMat reduced;
    std::vector<size_t> pivot_cols;
};

/// Non-destructive reduced row echelon form.
inline RowReduceResult row_reduce(const DenseMat& m, const PrimeField& F) {
    RowReduceResult r;
    r.reduced = m;
    r.rank = r.reduced.echelonize(F, true);
    r.pivot_cols = r.reduced.pivot_cols();
    return r;
}

/// Exact kernel of a very tall matrix (rows >> cols) without eliminating all
/// rows: first the kernel K1 of a deterministic sample of rows, then the
/// kernel K2 of (remaining rows restricted to K1). The result K1·K2 is the
/// exact kernel whatever the sample was; a good sample just makes K1 small.
/// `row_at(i)` must yield row i reduced mod p.
template <typename RowFn>
std::vector<std::vector<uint32_t>> kernel_of_tall(size_t rows, size_t cols, RowFn&& row_at,
                                                  const PrimeField& F, size_t oversample = 64) {
    size_t take = std::min(rows, cols + oversample);
    // Stride through the rows so structured inputs (rows grouped by block)
    // contribute from every block.
    size_t stride = rows <= take ? 1 : rows / take;
    std::vector<size_t> sample;
    std::vector<bool> used(rows, false);
    for (size_t k = 0; k < take; ++k) {
        size_t idx = (k * stride + k / 7) % rows;
        while (used[idx]) idx = (idx + 1) % rows;
        used[idx] = true;
        sample.push_back(idx);
    }
    DenseMat a1(sample.size(), cols);
    for (size_t i = 0; i < sample.size(); ++i) {
        std::vector<uint32_t> row = row_at(sample[i]);
        for (size_t j = 0; j < cols; ++j) a1.set(i, j, row[j]);
    }
    std::vector<std::vector<uint32_t>> k1 = a1.kernel_basis(F);
    if (k1.empty()) return {};
    // Evaluate every remaining row on K1 and intersect.
    DenseMat t(rows - sample.size(), k1.size());
    size_t ti = 0;
    const uint64_t p = F.p();
    const bool lazy = F.small();  // products < 2^30, row sums < 2^30 * cols
    for (size_t i = 0; i < rows; ++i) {
        if (used[i]) continue;
        std::vector<uint32_t> row = row_at(i);
        for (size_t b = 0; b < k1.size(); ++b) {
            uint64_t acc = 0;
            const std::vector<uint32_t>& v = k1[b];
            if (lazy) {
                for (size_t j = 0; j < cols; ++j) acc += static_cast<uint64_t>(row[j]) * v[j];
                acc %= p;
            } else {
                for (size_t j = 0; j < cols; ++j)
                    acc = (acc + static_cast<uint64_t>(row[j]) * v[j]) % p;
            }
            t.set(ti, b, static_cast<uint32_t>(acc));
        }
        ++ti;
    }
    std::vector<std::vector<uint32_t>> k2 = t.kernel_basis(F);
    std::vector<std::vector<uint32_t>> out;
    out.reserve(k2.size());
    for (const std::vector<uint32_t>& w : k2) {
        std::vector<uint32_t> v(cols, 0);
        for (size_t b = 0; b < k1.size(); ++b) {
            if (w[b] == 0) continue;
            for (size_t j = 0; j < cols; ++j)
                v[j] = static_cast<uint32_t>((v[j] + static_cast<uint64_t>(w[b]) * k1[b][j]) % p);
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace surf10

#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "surf10/groebner.hpp"
#include "surf10/hilbert.hpp"
#include "surf10/matrix.hpp"

namespace surf10 {

/// Graded quotient ring R/I with per-degree standard-monomial bases, memoized
/// normal-form coordinates, and multiplication matrices — the coordinate
/// system for every degree-truncated module computation (Koszul strands,
/// saturation, Hom spaces).
///
/// basis(d) lists the standard monomials of degree d (not divisible by any
/// Gröbner leading term) in descending grevlex; coordinates follow that order.
class QuotientRing {
public:
    QuotientRing(Ideal I, const PrimeField& F, int dmax)
        : F_(F), I_(std::move(I)), dmax_(dmax) {
        const std::vector<HomogPoly>& gb = I_.gb(F_);
        lead_ = lead_monomials(gb);
        bases_.resize(static_cast<size_t>(dmax_) + 1);
        for (int d = 0; d <= dmax_; ++d) {
            for (const Monomial& m : monomials_of_degree(I_.nvars(), d))
                if (!is_lead_reducible(m)) bases_[static_cast<size_t>(d)].push_back(m);
        }
    }

    const PrimeField& field() const { return F_; }
    const Ideal& ideal() const { return I_; }
    int nvars() const { return I_.nvars(); }
    int dmax() const { return dmax_; }

    size_t dim(int d) const {
        check_degree(d);
        return bases_[static_cast<size_t>(d)].size();
    }

    const std::vector<Monomial>& basis(int d) const {
        check_degree(d);
        return bases_[static_cast<size_t>(d)];
    }

    /// Coordinates of the normal form of a monomial, in basis(deg m).
    const std::vector<uint32_t>& nf_monomial(const Monomial& m) const {
        auto it = nf_memo_.find(m.packed());
        if (it != nf_memo_.end()) return it->second;
        int d = m.degree();
        check_degree(d);
        const std::vector<Monomial>& bs = bases_[static_cast<size_t>(d)];
        std::vector<uint32_t> coords(bs.size(), 0);
        if (!is_lead_reducible(m)) {
            coords[monomial_index(bs, m)] = 1;
        } else {
            // m = lm(g) * q for the first applicable Gröbner element g (monic):
            // NF(m) = -sum over tail terms t of g of t.c * NF(t.m * q).
            const HomogPoly* g = nullptr;
            for (const HomogPoly& cand : I_.gb(F_))
                if (cand.leading_monomial().divides(m)) { g = &cand; break; }
            Monomial q = m.divided_by(g->leading_monomial());
            bool first = true;
            for (const Term& t : g->terms()) {
                if (first) { first = false; continue; }  // skip the lead (coefficient 1)
                const std::vector<uint32_t>& sub = nf_monomial(t.m * q);
                uint32_t c = F_.neg(t.c);
                for (size_t i = 0; i < coords.size(); ++i)
                    if (sub[i] != 0)
                        coords[i] = static_cast<uint32_t>(
                            (coords[i] + static_cast<uint64_t>(c) * sub[i]) % F_.p());
            }
        }
        return nf_memo_.emplace(m.packed(), std::move(coords)).first->second;
    }

    std::vector<uint32_t> nf(const HomogPoly& f) const {
        check_degree(f.degree());
        std::vector<uint32_t> coords(dim(f.degree()), 0);
        for (const Term& t : f.terms()) {
            const std::vector<uint32_t>& sub = nf_monomial(t.m);
            for (size_t i = 0; i < coords.size(); ++i)
                if (sub[i] != 0)
                    coords[i] = static_cast<uint32_t>(
                        (coords[i] + static_cast<uint64_t>(t.c) * sub[i]) % F_.p());
        }
        return coords;
    }

    /// Multiplication by x_v as a dim(d+1) x dim(d) matrix.
    const DenseMat& var_mult(int v, int d) const {
        check_degree(d + 1);
        auto key = std::make_pair(v, d);
        auto it = mult_memo_.find(key);
        if (it != mult_memo_.end()) return it->second;
        const std::vector<Monomial>& from = basis(d);
        DenseMat m(dim(d + 1), from.size());
        Monomial x = Monomial::variable(v);
        for (size_t j = 0; j < from.size(); ++j) {
            const std::vector<uint32_t>& col = nf_monomial(from[j] * x);
            for (size_t i = 0; i < col.size(); ++i)
                if (col[i] != 0) m.set(i, j, col[i]);
        }
        return mult_memo_.emplace(key, std::move(m)).first->second;
    }

    /// Multiplication by an arbitrary form as a dim(d+deg f) x dim(d) matrix.
    DenseMat poly_mult(const HomogPoly& f, int d) const {
        check_degree(d + f.degree());
        const std::vector<Monomial>& from = basis(d);
        DenseMat m(dim(d + f.degree()), from.size());
        for (size_t j = 0; j < from.size(); ++j) {
            std::vector<uint32_t> acc(m.rows(), 0);
            for (const Term& t : f.terms()) {
                const std::vector<uint32_t>& col = nf_monomial(t.m * from[j]);
                for (size_t i = 0; i < col.size(); ++i)
                    if (col[i] != 0)
                        acc[i] = static_cast<uint32_t>(
                            (acc[i] + static_cast<uint64_t>(t.c) * col[i]) % F_.p());
            }
            for (size_t i = 0; i < acc.size(); ++i)
                if (acc[i] != 0) m.set(i, j, acc[i]);
        }
        return m;
    }

private:
    bool is_lead_reducible(const Monomial& m) const {
        for (const Monomial& l : lead_)
            if (l.divides(m)) return true;
        return false;
    }

    void check_degree(int d) const {
        if (d < 0 || d > dmax_)
            throw std::out_of_range("quotient ring: degree beyond the configured bound");
    }

    PrimeField F_;
    Ideal I_;
    int dmax_;
    std::vector<Monomial> lead_;
    std::vector<std::vector<Monomial>> bases_;
    mutable std::unordered_map<uint64_t, std::vector<uint32_t>> nf_memo_;
    mutable std::map<std::pair<int, int>, DenseMat> mult_memo_;
};

} // namespace surf10

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "surf10/field.hpp"
#include "surf10/monomial.hpp"

namespace surf10 {

struct Term {
    Monomial m;
    uint32_t c = 0;  // coefficient in [0, p)
};

/// Homogeneous polynomial: terms of one common total degree with distinct
/// monomials, sorted descending in grevlex, all coefficients nonzero. The
/// zero polynomial carries an explicit degree so graded bookkeeping stays
/// exact (a zero entry of a graded matrix still has a well-defined degree).
class HomogPoly {
public:
    HomogPoly() = default;

    explicit HomogPoly(int degree) : deg_(degree) {
        if (degree < 0) throw std::invalid_argument("poly: negative degree");
    }

    /// Normalizes: sorts, merges equal monomials mod p, drops zeros, checks
    /// every monomial has the stated degree.
    static HomogPoly from_terms(int degree, std::vector<Term> terms, const PrimeField& F) {
        HomogPoly r(degree);
        for (Term& t : terms) {
            if (t.m.degree() != degree)
                throw std::invalid_argument("poly: term degree mismatch");
            t.c %= F.p();
        }
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m); });
        for (const Term& t : terms) {
            if (!r.t_.empty() && r.t_.back().m == t.m)
                r.t_.back().c = F.add(r.t_.back().c, t.c);
            else
                r.t_.push_back(t);
        }
        std::erase_if(r.t_, [](const Term& t) { return t.c == 0; });
        return r;
    }

    static HomogPoly monomial_term(const Monomial& m, uint32_t c, const PrimeField& F) {
        HomogPoly r(m.degree());
        c %= F.p();
        if (c != 0) r.t_.push_back({m, c});
        return r;
    }

    int degree() const { return deg_; }
    bool is_zero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }
    size_t term_count() const { return t_.size(); }

    const Monomial& leading_monomial() const {
        if (t_.empty()) throw std::domain_error("poly: leading term of zero");
        return t_.front().m;
    }

    uint32_t leading_coeff() const {
        if (t_.empty()) throw std::domain_error("poly: leading term of zero");
        return t_.front().c;
    }

    /// Coefficient of m (0 when absent). Binary search in grevlex order.
    uint32_t coeff_of(const Monomial& m) const {
        auto it = std::lower_bound(
            t_.begin(), t_.end(), m,
            [](const Term& t, const Monomial& mm) { return grevlex_greater(t.m, mm); });
        if (it != t_.end() && it->m == m) return it->c;
        return 0;
    }

    HomogPoly add(const HomogPoly& o, const PrimeField& F) const {
        require_same_degree(o);
        HomogPoly r(deg_);
        r.t_.reserve(t_.size() + o.t_.size());
        size_t i = 0, j = 0;
        while (i < t_.size() && j < o.t_.size()) {
            if (t_[i].m == o.t_[j].m) {
                uint32_t c = F.add(t_[i].c, o.t_[j].c);
                if (c != 0) r.t_.push_back({t_[i].m, c});
                ++i, ++j;
            } else if (grevlex_greater(t_[i].m, o.t_[j].m)) {
                r.t_.push_back(t_[i++]);
            } else {
                r.t_.push_back(o.t_[j++]);
            }
        }
        for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
        for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
        return r;
    }

    HomogPoly sub(const HomogPoly& o, const PrimeField& F) const {
        return add(o.scale(F.p() - 1, F), F);
    }

    HomogPoly scale(uint32_t c, const PrimeField& F) const {
        c %= F.p();
        HomogPoly r(deg_);
        if (c == 0) return r;
        r.t_ = t_;
        for (Term& t : r.t_) t.c = F.mul(t.c, c);
        return r;
    }

    HomogPoly monic(const PrimeField& F) const {
        if (t_.empty()) return *this;
        return scale(F.inv(t_.front().c), F);
    }

    /// Multiply by a single scaled monomial; preserves term order, no re-sort.
    HomogPoly mul_term(const Monomial& m, uint32_t c, const PrimeField& F) const {
        HomogPoly r(deg_ + m.degree());
        c %= F.p();
        if (c == 0) return r;
        r.t_.reserve(t_.size());
        for (const Term& t : t_) r.t_.push_back({t.m * m, F.mul(t.c, c)});
        return r;
    }

    HomogPoly mul(const HomogPoly& o, const PrimeField& F) const {
        std::vector<Term> acc;
        acc.reserve(t_.size() * o.t_.size());
        for (const Term& a : t_)
            for (const Term& b : o.t_) acc.push_back({a.m * b.m, F.mul(a.c, b.c)});
        return from_terms(deg_ + o.deg_, std::move(acc), F);
    }

    uint32_t evaluate(const std::vector<uint32_t>& point, const PrimeField& F) const {
        uint64_t acc = 0;
        for (const Term& t : t_) {
            uint64_t v = t.c;
            for (size_t i = 0; i < point.size() && i < Monomial::max_vars; ++i)
                if (t.m.e[i] != 0) v = v * F.pow(point[i], t.m.e[i]) % F.p();
            acc += v;
            if (acc >= (1ull << 62)) acc %= F.p();
        }
        return static_cast<uint32_t>(acc % F.p());
    }

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        if (a.deg_ != b.deg_ || a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
        return true;
    }

private:
    void require_same_degree(const HomogPoly& o) const {
        if (deg_ != o.deg_) throw std::invalid_argument("poly: degree mismatch");
    }

    int deg_ = 0;
    std::vector<Term> t_;  // descending grevlex, nonzero coefficients
};

namespace detail {

/// Coefficient vector of f over a sorted monomial basis (0 where absent).
inline std::vector<uint32_t> dense_coeffs(const HomogPoly& f, const std::vector<Monomial>& basis) {
    std::vector<uint32_t> v(basis.size(), 0);
    for (const Term& t : f.terms()) v[monomial_index(basis, t.m)] = t.c;
    return v;
}

/// Inverse of dense_coeffs: rebuild the polynomial from coordinates.
inline HomogPoly poly_from_coeffs(const std::vector<uint32_t>& v,
                                  const std::vector<Monomial>& basis, int degree,
                                  const PrimeField& F) {
    std::vector<Term> ts;
    for (size_t k = 0; k < basis.size(); ++k)
        if (v[k] % F.p() != 0) ts.push_back({basis[k], v[k] % F.p()});
    return HomogPoly::from_terms(degree, std::move(ts), F);
}

} // namespace detail

} // namespace surf10

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace surf10 {

/// Exponent vector of a monomial in at most 8 variables, one byte per
/// variable. Unused positions stay zero, so monomials in fewer variables
/// compare consistently no matter the ambient count.
struct Monomial {
    static constexpr int max_vars = 8;

    std::array<uint8_t, max_vars> e{};

    static Monomial one() { return Monomial{}; }

    static Monomial variable(int i) {
        if (i < 0 || i >= max_vars) throw std::out_of_range("monomial: variable index");
        Monomial m;
        m.e[static_cast<size_t>(i)] = 1;
        return m;
    }

    int degree() const {
        int d = 0;
        for (uint8_t x : e) d += x;
        return d;
    }

    bool is_one() const { return packed() == 0; }

    /// Exponents read as a little-endian 64-bit integer. Used as hash key and
    /// by the grevlex comparator: among monomials of equal degree, grevlex
    /// descending order is exactly packed() ascending.
    uint64_t packed() const {
        uint64_t u = 0;
        for (int i = max_vars - 1; i >= 0; --i) u = (u << 8) | e[static_cast<size_t>(i)];
        return u;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < max_vars; ++i) {
            int s = e[i] + o.e[i];
            if (s > 255) throw std::overflow_error("monomial: exponent overflow");
            r.e[i] = static_cast<uint8_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < max_vars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// this / d; caller guarantees d.divides(*this).
    Monomial divided_by(const Monomial& d) const {
        Monomial r;
        for (size_t i = 0; i < max_vars; ++i) r.e[i] = static_cast<uint8_t>(e[i] - d.e[i]);
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < max_vars; ++i) r.e[i] = std::max(e[i], o.e[i]);
        return r;
    }

    bool coprime_to(const Monomial& o) const {
        for (size_t i = 0; i < max_vars; ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }
};

/// Graded reverse lexicographic order with x0 > x1 > ... : first compare total
/// degree; on ties a > b iff the rightmost nonzero entry of a - b is negative,
/// which for byte-packed exponents is the plain integer test packed(a) < packed(b).
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.packed() < b.packed();
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); }

/// All monomials of the given total degree in variables x0..x(nvars-1),
/// sorted descending in grevlex. Size C(d + nvars - 1, nvars - 1).
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    if (nvars < 1 || nvars > Monomial::max_vars)
        throw std::invalid_argument("monomial: variable count out of range");
    if (d < 0) return {};
    if (d > 255) throw std::overflow_error("monomial: degree too large");
    std::vector<Monomial> out;
    Monomial cur;
    // Distribute degree d over positions 0..nvars-1, rightmost position gets
    // the remainder.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur.e[static_cast<size_t>(pos)] = static_cast<uint8_t>(rem);
            out.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur.e[static_cast<size_t>(pos)] = static_cast<uint8_t>(k);
            self(self, pos + 1, rem - k);
        }
        cur.e[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        return std::hash<uint64_t>{}(m.packed() * 0x9e3779b97f4a7c15ull);
    }
};

/// Position of m in a descending-grevlex sorted basis (as produced by
/// monomials_of_degree). m must be present.
inline size_t monomial_index(const std::vector<Monomial>& sorted_basis, const Monomial& m) {
    auto it = std::lower_bound(sorted_basis.begin(), sorted_basis.end(), m, grevlex_greater);
    if (it == sorted_basis.end() || !(*it == m))
        throw std::logic_error("monomial_index: basis does not contain the monomial");
    return static_cast<size_t>(it - sorted_basis.begin());
}

} // namespace surf10

#pragma once

#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "surf10/polynomial.hpp"

namespace surf10 {

/// Text format shared by every tool: a header line `ring p=<prime> vars=<N+1>`,
/// then one polynomial per line in the variables x0..xN, terms like
/// `3*x0^2*x1` joined by `+`/`-`. Lines starting with `#` are comments.
/// Output is canonical: `+` separators, coefficients in [1, p), exponent
/// suffix `^e` only for e > 1, unit coefficients omitted.

inline std::string format_poly(const HomogPoly& f, int nvars) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool coeff_shown = (t.c != 1) || t.m.is_one();
        if (coeff_shown) os << t.c;
        bool need_star = coeff_shown;
        for (int i = 0; i < nvars; ++i) {
            uint8_t e = t.m.e[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << "x" << i;
            if (e > 1) os << "^" << static_cast<int>(e);
        }
    }
    return os.str();
}

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline uint64_t parse_uint(const std::string& s, size_t& i, const char* what) {
    size_t start = i;
    uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<uint64_t>(s[i] - '0');
        if (v > (1ull << 40)) throw std::invalid_argument(std::string("poly parse: ") + what + " too large");
        ++i;
    }
    if (i == start) throw std::invalid_argument(std::string("poly parse: expected ") + what);
    return v;
}

} // namespace detail

/// Parse one polynomial line. Accepts either separator sign; a leading `-` is
/// allowed. The (common) degree of the terms becomes the polynomial's degree;
/// the literal `0` parses to the zero polynomial of degree 0.
inline HomogPoly parse_poly(const std::string& line, int nvars, const PrimeField& F) {
    size_t i = 0;
    detail::skip_ws(line, i);
    if (i < line.size() && line[i] == '0') {
        size_t j = i + 1;
        detail::skip_ws(line, j);
        if (j >= line.size()) return HomogPoly(0);
    }
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        detail::skip_ws(line, i);
        if (i >= line.size()) break;
        uint32_t sign = 1;
        if (line[i] == '+' || line[i] == '-') {
            if (first) {
                if (line[i] == '-') sign = F.p() - 1;
                ++i;
            } else {
                sign = (line[i] == '-') ? F.p() - 1 : 1;
                ++i;
            }
            detail::skip_ws(line, i);
        } else if (!first) {
            throw std::invalid_argument("poly parse: expected +/- between terms");
        }
        first = false;
        // term: coeff ('*' varpow)*  |  varpow ('*' varpow)*
        uint64_t coeff = 1;
        bool have_coeff = false;
        Monomial m;
        auto parse_varpow = [&]() {
            if (i >= line.size() || line[i] != 'x')
                throw std::invalid_argument("poly parse: expected variable");
            ++i;
            uint64_t vi = detail::parse_uint(line, i, "variable index");
            if (vi >= static_cast<uint64_t>(nvars))
                throw std::invalid_argument("poly parse: variable index out of range");
            uint64_t e = 1;
            if (i < line.size() && line[i] == '^') {
                ++i;
                e = detail::parse_uint(line, i, "exponent");
            }
            int cur = m.e[static_cast<size_t>(vi)] + static_cast<int>(e);
            if (cur > 255) throw std::overflow_error("poly parse: exponent overflow");
            m.e[static_cast<size_t>(vi)] = static_cast<uint8_t>(cur);
        };
        if (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
            coeff = detail::parse_uint(line, i, "coefficient");
            have_coeff = true;
        } else {
            parse_varpow();
        }
        while (true) {
            size_t save = i;
            detail::skip_ws(line, i);
            if (i < line.size() && line[i] == '*') {
                ++i;
                detail::skip_ws(line, i);
                parse_varpow();
            } else {
                i = save;
                break;
            }
        }
        // After a term only +, -, or end of line may follow.
        {
            size_t save = i;
            detail::skip_ws(line, i);
            if (i < line.size() && line[i] != '+' && line[i] != '-')
                throw std::invalid_argument("poly parse: expected +/- between terms");
            i = save;
        }
        terms.push_back({m, F.mul(F.from_int(static_cast<int64_t>(coeff % F.p())), sign)});
    }
    if (terms.empty()) return HomogPoly(0);
    int deg = terms.front().m.degree();
    return HomogPoly::from_terms(deg, std::move(terms), F);
}

struct PolyFile {
    uint32_t p = 0;
    int nvars = 0;
    std::vector<HomogPoly> polys;
};

inline std::string write_poly_file(const std::vector<HomogPoly>& polys, int nvars,
                                   const PrimeField& F,
                                   const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    for (const std::string& c : comments) os << "# " << c << "\n";
    os << "ring p=" << F.p() << " vars=" << nvars << "\n";
    for (const HomogPoly& f : polys) os << format_poly(f, nvars) << "\n";
    return os.str();
}

inline PolyFile read_poly_file(std::istream& in) {
    PolyFile pf;
    std::string line;
    bool have_header = false;
    std::unique_ptr<PrimeField> F;
    while (std::getline(in, line)) {
        size_t i = 0;
        detail::skip_ws(line, i);
        if (i >= line.size() || line[i] == '#') continue;
        if (!have_header) {
            std::istringstream hs(line);
            std::string ringword, ptok, vtok;
            hs >> ringword >> ptok >> vtok;
            if (ringword != "ring" || ptok.rfind("p=", 0) != 0 || vtok.rfind("vars=", 0) != 0)
                throw std::invalid_argument("poly file: bad header: " + line);
            pf.p = static_cast<uint32_t>(std::stoul(ptok.substr(2)));
            pf.nvars = std::stoi(vtok.substr(5));
            if (pf.nvars < 1 || pf.nvars > Monomial::max_vars)
                throw std::invalid_argument("poly file: unsupported variable count");
            F = std::make_unique<PrimeField>(pf.p);
            have_header = true;
            continue;
        }
        pf.polys.push_back(parse_poly(line, pf.nvars, *F));
    }
    if (!have_header) throw std::invalid_argument("poly file: missing header");
    return pf;
}

inline PolyFile read_poly_file_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_poly_file(is);
}

inline PolyFile load_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("poly file: cannot open " + path);
    return read_poly_file(in);
}

inline void save_poly_file(const std::string& path, const std::vector<HomogPoly>& polys,
                           int nvars, const PrimeField& F,
                           const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("poly file: cannot write " + path);
    out << write_poly_file(polys, nvars, F, comments);
}

} // namespace surf10

#pragma once

#include <stdexcept>
#include <vector>

#include "surf10/groebner.hpp"
#include "surf10/linsys.hpp"
#include "surf10/matrix.hpp"
#include "surf10/saturate.hpp"

namespace surf10 {

namespace detail {

/// Monomial gamma composed with the map: the product of forms[i]^gamma_i.
inline HomogPoly compose_plane(const std::vector<HomogPoly>& forms, const Monomial& gamma,
                               const PrimeField& F) {
    HomogPoly f = HomogPoly::monomial_term(Monomial::one(), 1, F);
    for (size_t i = 0; i < forms.size(); ++i)
        for (int k = 0; k < gamma.e[i]; ++k) f = f.mul(forms[i], F);
    return f;
}

inline CoxSection compose_cox(const std::vector<CoxSection>& sections, const Monomial& gamma,
                              const PrimeField& F) {
    CoxSection f;
    f.e = sections.front().e;
    f.coeffs[{0, 0}] = 1;
    for (size_t i = 0; i < sections.size(); ++i)
        for (int k = 0; k < gamma.e[i]; ++k) f = cox_mul(f, sections[i], F);
    return f;
}

} // namespace detail

/// Forms of degree d in the target coordinates vanishing on the image of the
/// map given by `forms` (all of one degree on the plane): the kernel of the
/// matrix whose column at a target monomial is its pullback, written over the
/// source monomial basis. A form pulls back to zero exactly when it vanishes
/// on the closure of the image, so the kernel is the full degree-d piece of
/// the image's ideal. The result is saturated before returning.
inline Ideal implicitize(const std::vector<HomogPoly>& forms, int d, const PrimeField& F) {
    if (forms.size() < 2 || forms.size() > static_cast<size_t>(Monomial::max_vars))
        throw std::invalid_argument("implicitize: target dimension out of range");
    int src_deg = forms.front().degree();
    for (const HomogPoly& f : forms)
        if (f.degree() != src_deg) throw std::invalid_argument("implicitize: mixed degrees");
    int nt = static_cast<int>(forms.size());
    std::vector<Monomial> target = monomials_of_degree(nt, d);
    std::vector<Monomial> source = monomials_of_degree(3, d * src_deg);
    DenseMat A(source.size(), target.size());
    for (size_t c = 0; c < target.size(); ++c) {
        HomogPoly comp = detail::compose_plane(forms, target[c], F);
        for (const Term& t : comp.terms()) A.set(monomial_index(source, t.m), c, t.c);
    }
    std::vector<std::vector<uint32_t>> ker = A.kernel_basis(F);
    std::vector<HomogPoly> gens;
    gens.reserve(ker.size());
    for (const std::vector<uint32_t>& v : ker)
        gens.push_back(detail::poly_from_coeffs(v, target, d, F));
    if (gens.empty()) return Ideal({}, nt);
    return saturate_irrelevant(Ideal(std::move(gens), nt), F);
}

/// Same kernel construction for a map defined by Hirzebruch sections of one
/// class; pullbacks are computed in the dense chart, which detects the zero
/// section exactly.
inline Ideal implicitize(const std::vector<CoxSection>& sections, int d, const PrimeField& F) {
    if (sections.size() < 2 || sections.size() > static_cast<size_t>(Monomial::max_vars))
        throw std::invalid_argument("implicitize: target dimension out of range");
    const CoxSection& s0 = sections.front();
    for (const CoxSection& s : sections)
        if (s.a != s0.a || s.b != s0.b || s.e != s0.e)
            throw std::invalid_argument("implicitize: mixed classes");
    int nt = static_cast<int>(sections.size());
    std::vector<Monomial> target = monomials_of_degree(nt, d);
    std::vector<std::pair<int, int>> source = cox_class_basis(s0.e, d * s0.a, d * s0.b);
    auto row_of = [&](const std::pair<int, int>& key) {
        auto it = std::lower_bound(source.begin(), source.end(), key);
        if (it == source.end() || *it != key)
            throw std::logic_error("implicitize: chart exponent outside the class");
        return static_cast<size_t>(it - source.begin());
    };
    DenseMat A(source.size(), target.size());
    for (size_t c = 0; c < target.size(); ++c) {
        CoxSection comp = detail::compose_cox(sections, target[c], F);
        for (const auto& [ex, coeff] : comp.coeffs) A.set(row_of(ex), c, coeff);
    }
    std::vector<std::vector<uint32_t>> ker = A.kernel_basis(F);
    std::vector<HomogPoly> gens;
    gens.reserve(ker.size());
    for (const std::vector<uint32_t>& v : ker)
        gens.push_back(detail::poly_from_coeffs(v, target, d, F));
    if (gens.empty()) return Ideal({}, nt);
    return saturate_irrelevant(Ideal(std::move(gens), nt), F);
}

/// Dimension of the degree-m graded piece of I (for saturated I this is
/// h^0 of the twisted ideal sheaf).
inline int64_t h0_twist(const Ideal& I, int m, const PrimeField& F) {
    return static_cast<int64_t>(ideal_degree_dimension(I.gens(), I.nvars(), m, F));
}

/// The image of a source point under the map (a target coordinate tuple).
inline std::vector<uint32_t> map_image(const std::vector<HomogPoly>& forms,
                                       const std::vector<uint32_t>& src, const PrimeField& F) {
    std::vector<uint32_t> out;
    out.reserve(forms.size());
    for (const HomogPoly& f : forms) out.push_back(f.evaluate(src, F));
    return out;
}

inline std::vector<uint32_t> map_image(const std::vector<CoxSection>& sections,
                                       const std::vector<uint32_t>& src, const PrimeField& F) {
    std::vector<uint32_t> out;
    out.reserve(sections.size());
    for (const CoxSection& s : sections) out.push_back(cox_eval(s, src, F));
    return out;
}

} // namespace surf10

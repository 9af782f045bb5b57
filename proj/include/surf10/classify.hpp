#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "surf10/families.hpp"
#include "surf10/linsys.hpp"
#include "surf10/util.hpp"

namespace surf10 {

// ---------------------------------------------------------------------------
// Intersection-theoretic data of a polarized surface.
// ---------------------------------------------------------------------------

/// The numerical invariants carried along the adjunction analysis: the
/// intersection matrix ((H^2, H.K), (H.K, K^2)), the holomorphic Euler
/// characteristic, irregularity and geometric genus, and (once a concrete
/// blowup model is identified) the topological Euler number.
struct IntersectionData {
    int64_t H2 = 0;
    int64_t HK = 0;
    int64_t K2 = 0;
    int64_t chi = 1;
    int64_t q = 0;
    int64_t p_g = 0;
    std::optional<int64_t> chi_top;

    int64_t sectional_genus() const { return (H2 + HK) / 2 + 1; }
};

// ---------------------------------------------------------------------------
// Elementary exact-integer operations.
// ---------------------------------------------------------------------------

/// Euler characteristic of the twisted ideal sheaf of a surface of degree d
/// and sectional genus pi in P^5 (Riemann-Roch):
///   chi(I(m)) = C(m+5,5) - C(m+1,2) d + m(pi-1) - 1 + q - p_g.
inline int64_t chi_ideal_twist(int64_t d, int64_t pi, int64_t q, int64_t p_g, int64_t m) {
    return binomial(m + 5, 5) - binomial(m + 1, 2) * d + m * (pi - 1) - 1 + q - p_g;
}

/// H.K for a degree-d surface of sectional genus pi (adjunction on a
/// hyperplane section): H.K = 2 pi - 2 - d.
inline int64_t hk_from_genus(int64_t d, int64_t pi) { return 2 * pi - 2 - d; }

/// Upper bound on K^2 from the Hodge index theorem: the intersection matrix
/// of H and K is indefinite unless H and K are numerically dependent, so
/// K^2 <= (H.K)^2 / H^2. Requires H2 > 0; returns the floor.
inline int64_t hodge_bound(int64_t H2, int64_t HK) {
    if (H2 <= 0) throw std::invalid_argument("hodge_bound: H^2 must be positive");
    return (HK * HK) / H2;
}

/// Dimension of the adjoint system |H+K| on a non-special surface:
/// h^0(H+K) = chi + pi - 1 (Riemann-Roch plus Kodaira vanishing).
inline int64_t adjoint_h0(int64_t chi, int64_t pi) { return chi + pi - 1; }

/// Left-hand side of the double-point formula for a smooth surface in P^4:
///   d^2 - 10 d - 5 H.K - 2 K^2 + 12 chi.
/// A smooth embedding in P^4 forces the value 0.
inline int64_t double_point_residue(int64_t d, int64_t HK, int64_t K2, int64_t chi) {
    return d * d - 10 * d - 5 * HK - 2 * K2 + 12 * chi;
}

/// Numerics of the adjoint surface X_1 under Phi_{|H+K|}, which blows down
/// `blown_down` many (-1)-lines:
///   H_1^2 = (H+K)^2,  H_1.K_1 = (H+K).K,  K_1^2 = K^2 + blown_down,
/// with chi, q, p_g preserved and chi_top decreasing by the blow-down count.
inline IntersectionData adjunction_step(const IntersectionData& x, int64_t blown_down) {
    IntersectionData y = x;
    y.H2 = x.H2 + 2 * x.HK + x.K2;
    y.HK = x.HK + x.K2;
    y.K2 = x.K2 + blown_down;
    if (x.chi_top) y.chi_top = *x.chi_top - blown_down;
    return y;
}

/// Topological Euler number of a surface blown up in l points.
inline int64_t chi_top_blowup(int64_t base_chi_top, int64_t l) { return base_chi_top + l; }

/// Expected h^0 of the normal bundle of the surface inside a cubic fourfold
/// through it, as a function of t = K^2.
inline int64_t expected_normal_sections(int64_t t) { return -2 * t; }

/// Self-intersection inside a cubic fourfold and the discriminant of the
/// rank-2 lattice spanned by the square of the hyperplane class and the
/// surface class.
struct DiscriminantRecord {
    int64_t t = 0;      // K^2 of the surface
    int64_t X2 = 0;     // self-intersection: 48 + 2t
    int64_t delta = 0;  // lattice discriminant: 44 + 6t
};

inline DiscriminantRecord discriminant_invariants(int64_t t) {
    if (t < -6 || t > 0)
        throw std::invalid_argument("discriminant_invariants: t must lie in [-6, 0]");
    return DiscriminantRecord{t, 48 + 2 * t, 44 + 6 * t};
}

/// The admissible window for K_1^2 of the adjoint surface: bounded above by
/// the Hodge index theorem and below by both (H_1+K_1)^2 >= 0 and the
/// non-negativity of the blow-down count K_1^2 - K^2.
struct SubcaseWindow {
    int64_t lo = 0;
    int64_t hi = 0;
};

inline SubcaseWindow adjoint_k2_window(const IntersectionData& x) {
    int64_t H1 = x.H2 + 2 * x.HK + x.K2;
    int64_t HK1 = x.HK + x.K2;
    SubcaseWindow w;
    w.lo = std::max(x.K2, -(H1 + 2 * HK1));
    w.hi = hodge_bound(H1, HK1);
    return w;
}

// ---------------------------------------------------------------------------
// Classical classification of low-degree surfaces, as a lookup table keyed
// by (degree, sectional genus, K^2). Machine-checkable blowup models are
// attached where the surface is rational.
// ---------------------------------------------------------------------------

struct SurfaceClassEntry {
    int degree = 0;
    int genus = 0;
    int k2 = 0;
    std::string description;
    std::string model;
    std::string citation;
    std::optional<PlaneSpec> plane;
    std::optional<HirzebruchSpec> ruled;
};

inline const std::vector<SurfaceClassEntry>& surface_class_table() {
    static const std::vector<SurfaceClassEntry> table = [] {
        auto ones = [](int count) { return std::vector<int>(static_cast<size_t>(count), 1); };
        const std::string il = "Ionescu 1982; Livorni 1990";
        std::vector<SurfaceClassEntry> t;
        t.push_back({2, 0, 8, "smooth quadric surface", "P^1 x P^1 embedded by |C_0 + f|",
                     "classical", std::nullopt, HirzebruchSpec{0, 1, 1, {}}});
        t.push_back({3, 1, 3, "smooth cubic surface (del Pezzo of degree 3)",
                     "P^2(p_1..p_6) embedded by (3;1^6)", "classical", PlaneSpec{3, ones(6)},
                     std::nullopt});
        t.push_back({4, 0, 9, "Veronese surface", "P^2 embedded by |2L|", il, PlaneSpec{2, {}},
                     std::nullopt});
        t.push_back({4, 0, 8, "smooth quadric of type (1,2)", "P^1 x P^1 embedded by |C_0 + 2f|",
                     il, std::nullopt, HirzebruchSpec{0, 1, 2, {}}});
        t.push_back({5, 1, 5, "del Pezzo surface of degree 5",
                     "P^2(p_1..p_4) embedded by (3;1^4)", il, PlaneSpec{3, ones(4)},
                     std::nullopt});
        t.push_back({6, 2, 2, "conic bundle with six singular fibers",
                     "P^2(p_1..p_7) embedded by (4;2,1^6)", il,
                     PlaneSpec{4, {2, 1, 1, 1, 1, 1, 1}}, std::nullopt});
        t.push_back({7, 3, 1, "rational surface of degree 7 with K^2 = 1",
                     "P^2(p_1..p_8) embedded by (6;2^7,1)", il,
                     PlaneSpec{6, {2, 2, 2, 2, 2, 2, 2, 1}}, std::nullopt});
        t.push_back({7, 3, 0, "rational surface of degree 7 with K^2 = 0",
                     "P^2(p_1..p_9) embedded by (4;1^9)", il, PlaneSpec{4, ones(9)},
                     std::nullopt});
        t.push_back({7, 3, -1, "rational surface of degree 7 with K^2 = -1",
                     "F_e(p_1..p_9) embedded by (2,e+4;1^9)", il, std::nullopt,
                     HirzebruchSpec{0, 2, 4, ones(9)}});
        t.push_back({10, 6, 0, "Fano model of an Enriques surface",
                     "Enriques surface embedded by a Fano polarization",
                     "classical (cf. Decker-Ein-Schreyer 1993)", std::nullopt, std::nullopt});
        return t;
    }();
    return table;
}

inline const SurfaceClassEntry* surface_class_lookup(int degree, int genus, int k2) {
    for (const SurfaceClassEntry& e : surface_class_table())
        if (e.degree == degree && e.genus == genus && e.k2 == k2) return &e;
    return nullptr;
}

// ---------------------------------------------------------------------------
// The decision tree.
// ---------------------------------------------------------------------------

enum class Rule { hodge, adjoint_positivity, double_point, lookup, quadric_check, prop2_5_nonexistence };

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::hodge: return "hodge";
        case Rule::adjoint_positivity: return "adjoint_positivity";
        case Rule::double_point: return "double_point";
        case Rule::lookup: return "lookup";
        case Rule::quadric_check: return "quadric_check";
        case Rule::prop2_5_nonexistence: return "prop2_5_nonexistence";
    }
    return "?";
}

enum class Verdict { accepted, rejected, branch };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::accepted: return "accepted";
        case Verdict::rejected: return "rejected";
        case Verdict::branch: return "branch";
    }
    return "?";
}

/// How a node hangs below its parent: the root itself, a case split on K^2
/// of the same surface, an adjoint surface (data derived by adjunction_step),
/// or a choice between blowup models of the surface being classified.
enum class NodeKind { root, k2_case, adjoint_case, model_choice };

inline const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::root: return "root";
        case NodeKind::k2_case: return "k2_case";
        case NodeKind::adjoint_case: return "adjoint_case";
        case NodeKind::model_choice: return "model_choice";
    }
    return "?";
}

struct ClassificationNode {
    std::string label;
    NodeKind kind = NodeKind::root;
    IntersectionData data;
    int ambient_dim = 5;
    Rule rule = Rule::lookup;
    Verdict verdict = Verdict::branch;
    std::string family;                            // accepted leaves
    std::string reason;                            // rejected leaves
    bool needs_computation = false;                // rejection certified by a rank computation
    std::vector<std::string> quadric_check_models; // construction names certifying the rejection
    std::vector<std::string> annotations;
    std::vector<ClassificationNode> children;
};

/// Renders a plane linear system (b0; m_1, ..., m_l) compactly, grouping
/// equal multiplicities: (7;3,2^6,1^6).
inline std::string format_plane_system(const PlaneSpec& s) {
    std::string out = "(" + std::to_string(s.b0);
    if (!s.mults.empty()) out += ";";
    size_t i = 0;
    while (i < s.mults.size()) {
        size_t j = i;
        while (j < s.mults.size() && s.mults[j] == s.mults[i]) ++j;
        if (i > 0) out += ",";
        out += std::to_string(s.mults[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    out += ")";
    return out;
}

/// Name of the rational family with the given K^2, as the plane system that
/// cuts it out.
inline std::string family_name(int k2) { return format_plane_system(family_spec(k2)); }

namespace detail {

inline ClassificationNode accepted_leaf(std::string label, NodeKind kind, IntersectionData data,
                                        std::string family, std::vector<std::string> notes) {
    ClassificationNode n;
    n.label = std::move(label);
    n.kind = kind;
    n.data = data;
    n.rule = Rule::lookup;
    n.verdict = Verdict::accepted;
    n.family = std::move(family);
    n.annotations = std::move(notes);
    return n;
}

inline ClassificationNode rejected_leaf(std::string label, NodeKind kind, IntersectionData data,
                                        Rule rule, std::string reason,
                                        std::vector<std::string> models,
                                        std::vector<std::string> notes) {
    ClassificationNode n;
    n.label = std::move(label);
    n.kind = kind;
    n.data = data;
    n.rule = rule;
    n.verdict = Verdict::rejected;
    n.reason = std::move(reason);
    n.needs_computation = !models.empty();
    n.quadric_check_models = std::move(models);
    n.annotations = std::move(notes);
    return n;
}

inline std::string lookup_note(const SurfaceClassEntry& e) {
    return "classification of degree-" + std::to_string(e.degree) + " surfaces: " + e.description +
           ", " + e.model + " (" + e.citation + ")";
}

} // namespace detail

/// Builds the full decision tree for non-degenerate surfaces of degree 10 and
/// sectional genus 6 in P^5 whose ideal is generated by 10 cubics with a
/// 3-linear resolution. Pure integer arithmetic; the rejections that rest on
/// a rank computation (a quadric through the surface) name the construction
/// that certifies them and are marked needs_computation.
inline ClassificationNode classify(int d = 10, int pi = 6) {
    if (d != 10 || pi != 6)
        throw std::invalid_argument("classify: the decision tree is implemented for degree 10, sectional genus 6");
    using detail::accepted_leaf;
    using detail::lookup_note;
    using detail::rejected_leaf;

    const int64_t hk = hk_from_genus(10, 6); // 0
    ClassificationNode root;
    root.label = "X in P^5: degree 10, sectional genus 6";
    root.kind = NodeKind::root;
    root.data = IntersectionData{10, hk, 0, 1, 0, 0, std::nullopt};
    root.rule = Rule::hodge;
    root.verdict = Verdict::branch;
    root.annotations = {
        "H.K = 2*6 - 2 - 10 = 0; q = p_g = 0 and chi = 1 for these surfaces",
        "K^2 is not fixed at this node: Hodge index gives K^2 <= 0; the adjoint surface X_1 in P^5 is nondegenerate of degree 10 + K^2 >= 4, so K^2 >= -6",
        "h^0(I_X(3)) = " + std::to_string(chi_ideal_twist(10, 6, 0, 0, 3)) +
            " and h^0(I_X(2)) = " + std::to_string(chi_ideal_twist(10, 6, 0, 0, 2)) +
            " for the arithmetically Cohen-Macaulay families",
    };

    for (int t = -6; t <= 0; ++t) {
        IntersectionData X{10, hk, t, 1, 0, 0, std::nullopt};

        if (t == 0) {
            const SurfaceClassEntry* e = surface_class_lookup(10, 6, 0);
            IntersectionData enr = X;
            enr.chi_top = 12;
            ClassificationNode leaf = accepted_leaf(
                "K^2 = 0", NodeKind::k2_case, enr, "Enriques",
                {
                    "H.K = 0, K^2 = 0 and chi = 1: the canonical class is numerically trivial with 2K = 0, so X is the Fano model of an Enriques surface",
                    lookup_note(*e),
                    "chi_top = 12",
                    "realized computationally from a degree-9, sectional-genus-6 surface in P^4 via the adjoint linear system",
                });
            root.children.push_back(std::move(leaf));
            continue;
        }

        SubcaseWindow w = adjoint_k2_window(X);
        IntersectionData X1base = adjunction_step(X, 0);
        ClassificationNode tn;
        tn.label = "K^2 = " + std::to_string(t);
        tn.kind = NodeKind::k2_case;
        tn.data = X;
        tn.rule = (w.lo == w.hi) ? Rule::adjoint_positivity : Rule::hodge;
        tn.verdict = Verdict::branch;
        tn.annotations = {
            "adjoint system: h^0(H+K) = chi + pi - 1 = " + std::to_string(adjoint_h0(1, 6)) +
                ", so the adjoint surface X_1 is a smooth surface in P^5 (Sommese-Van de Ven)",
            "X_1 numerics: H_1^2 = " + std::to_string(X1base.H2) +
                ", H_1.K_1 = " + std::to_string(X1base.HK),
            "Hodge index: K_1^2 <= " + std::to_string(hodge_bound(X1base.H2, X1base.HK)),
            "(H_1+K_1)^2 >= 0: K_1^2 >= " + std::to_string(-(X1base.H2 + 2 * X1base.HK)) +
                "; blow-down count: K_1^2 >= K^2 = " + std::to_string(t),
            "admissible window: K_1^2 in [" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]",
        };

        for (int64_t k1 = w.lo; k1 <= w.hi; ++k1) {
            IntersectionData X1 = adjunction_step(X, k1 - t);
            std::string lbl = "K_1^2 = " + std::to_string(k1);
            int64_t a = k1 - t; // (-1)-lines contracted by the first adjunction

            if (t == -6 && k1 == 9) {
                const SurfaceClassEntry* e = surface_class_lookup(4, 0, 9);
                X1.chi_top = 12 - k1;
                tn.children.push_back(accepted_leaf(
                    lbl, NodeKind::adjoint_case, X1, family_name(-6),
                    {
                        lookup_note(*e),
                        "a = K_1^2 - K^2 = 15 lines blown down; X = P^2(p_1..p_15) embedded by (5;1^15)",
                        "chi_top(X) = 3 + 15 = 18",
                    }));
            } else if (t == -6 && k1 == 8) {
                const SurfaceClassEntry* e = surface_class_lookup(4, 0, 8);
                X1.chi_top = 12 - k1;
                tn.children.push_back(rejected_leaf(
                    lbl, NodeKind::adjoint_case, X1, Rule::quadric_check,
                    "lies on a quadric: h^0(I_X(2)) = 1, so the ideal is not generated by cubics alone",
                    {"F0(4,3;1^14)"},
                    {
                        lookup_note(*e),
                        "a = 14; X = F_0(p_1..p_14) embedded by (4,3;1^14)",
                        "quadric membership certified by random instantiation over F_p",
                    }));
            } else if (t == -5) {
                const SurfaceClassEntry* e = surface_class_lookup(5, 1, 5);
                X1.chi_top = 12 - k1;
                tn.children.push_back(accepted_leaf(
                    lbl, NodeKind::adjoint_case, X1, family_name(-5),
                    {
                        lookup_note(*e),
                        "a = 10 lines blown down; 9 - K^2 = 14 exceptional divisors; X = P^2(p_1..p_14) embedded by (6;2^4,1^10)",
                        "chi_top(X) = 3 + 14 = 17",
                    }));
            } else if (t == -4) {
                const SurfaceClassEntry* e = surface_class_lookup(6, 2, 2);
                X1.chi_top = 12 - k1;
                tn.children.push_back(accepted_leaf(
                    lbl, NodeKind::adjoint_case, X1, family_name(-4),
                    {
                        lookup_note(*e),
                        "a = 6; X = P^2(p_1..p_13) embedded by (7;3,2^6,1^6); chi_top(X) = 3 + 13 = 16",
                        "alternate ruled description: F_e(p_1..p_12) embedded by (4,2e+5;2^6,1^6) with 0 <= e <= 2 from H.C_0 = 5 - 2e >= 1",
                        "e = 2 fails very ampleness in dimension 5 (recorded, not computed); e = 0, 1 replane to (7;3,2^6,1^6)",
                    }));
            } else if (t == -3 && k1 == 1) {
                const SurfaceClassEntry* e = surface_class_lookup(7, 3, 1);
                X1.chi_top = 12 - k1;
                tn.children.push_back(rejected_leaf(
                    lbl, NodeKind::adjoint_case, X1, Rule::quadric_check,
                    "lies on a quadric: h^0(I_X(2)) = 1, so the ideal is not generated by cubics alone",
                    {"(9;3^7,2,1^4)"},
                    {
                        lookup_note(*e),
                        "a = 4; X = P^2(p_1..p_12) embedded by (9;3^7,2,1^4)",
                        "quadric membership certified by random instantiation over F_p",
                    }));
            } else if (t == -3 && k1 == 0) {
                const SurfaceClassEntry* e = surface_class_lookup(7, 3, 0);
                X1.chi_top = 12 - k1;
                tn.children.push_back(accepted_leaf(
                    lbl, NodeKind::adjoint_case, X1, family_name(-3),
                    {
                        lookup_note(*e),
                        "second adjunction: h^0(H_1+K_1) = chi + pi_1 - 1 = " +
                            std::to_string(adjoint_h0(1, X1.sectional_genus())) +
                            " maps X_1 birationally onto P^2",
                        "9 - K^2 = 12 exceptional divisors; the second adjunction contracts 12 - 3 = 9 further lines",
                        "X = P^2(p_1..p_12) embedded by (7;2^9,1^3); chi_top(X) = 3 + 12 = 15",
                    }));
            } else if (t == -3 && k1 == -1) {
                const SurfaceClassEntry* e = surface_class_lookup(7, 3, -1);
                X1.chi_top = 12 - k1;
                tn.children.push_back(rejected_leaf(
                    lbl, NodeKind::adjoint_case, X1, Rule::quadric_check,
                    "lies on a quadric: h^0(I_X(2)) = 1, so the ideal is not generated by cubics alone",
                    {"F0(4,6;2^9,1^2)", "F1(4,8;2^9,1^2)"},
                    {
                        lookup_note(*e),
                        "a = 2; X = F_e(p_1..p_11) embedded by (4,2e+6;2^9,1^2) with 0 <= e <= 2 from H.C_0 = 6 - 2e >= 1",
                        "quadric membership certified for e = 0 and e = 1; e = 2 is numerically admissible but not constructed",
                    }));
            } else if (t == -2 && k1 == 0) {
                IntersectionData X2 = adjunction_step(X1, 0);
                SubcaseWindow w2 = adjoint_k2_window(X1);
                tn.children.push_back(rejected_leaf(
                    lbl, NodeKind::adjoint_case, X1, Rule::prop2_5_nonexistence,
                    "no smooth degree-4 surface in P^3 with H.K = -2 and K^2 in {0, 1} carries a very ample system with these numerics (blowup-numerics criterion)",
                    {},
                    {
                        "second adjunction: h^0(H_1+K_1) = chi + pi_1 - 1 = " +
                            std::to_string(adjoint_h0(1, X1.sectional_genus())) +
                            " would map X_1 onto a surface X_2 in P^3",
                        "X_2 numerics: H_2^2 = " + std::to_string(X2.H2) +
                            ", H_2.K_2 = " + std::to_string(X2.HK) + "; K_2^2 in [" +
                            std::to_string(w2.lo) + ", " + std::to_string(w2.hi) + "]",
                    }));
            } else if (t == -2 && k1 == -1) {
                IntersectionData X2pre = adjunction_step(X1, 0);
                SubcaseWindow w2 = adjoint_k2_window(X1);
                const SurfaceClassEntry* e = surface_class_lookup(3, 1, 3);
                X1.chi_top = 12 - k1;
                tn.children.push_back(accepted_leaf(
                    lbl, NodeKind::adjoint_case, X1, family_name(-2),
                    {
                        "second adjunction: h^0(H_1+K_1) = 4 maps X_1 onto a cubic surface X_2 in P^3 with (H_2^2, H_2.K_2) = (" +
                            std::to_string(X2pre.H2) + ", " + std::to_string(X2pre.HK) +
                            "); Hodge and positivity force K_2^2 = " + std::to_string(w2.lo),
                        lookup_note(*e),
                        "the second adjunction contracts K_2^2 - K_1^2 = 4 lines; 9 - K_1^2 = 10 exceptional divisors on X_1",
                        "X = P^2(p_1..p_11) embedded by (9;3^6,2^4,1); chi_top(X) = 3 + 11 = 14",
                    }));
            } else if (t == -2 && k1 == -2) {
                IntersectionData X2 = adjunction_step(X1, 0);
                SubcaseWindow w2 = adjoint_k2_window(X1);
                ClassificationNode bn;
                bn.label = lbl;
                bn.kind = NodeKind::adjoint_case;
                bn.data = X1;
                bn.rule = Rule::hodge;
                bn.verdict = Verdict::branch;
                bn.annotations = {
                    "second adjunction: h^0(H_1+K_1) = 4 maps X_1 onto a quadric X_2 in P^3 with (H_2^2, H_2.K_2) = (" +
                        std::to_string(X2.H2) + ", " + std::to_string(X2.HK) + "); K_2^2 in [" +
                        std::to_string(w2.lo) + ", " + std::to_string(w2.hi) + "]",
                    "the blowup-numerics criterion leaves two models for X",
                };
                IntersectionData Xmodel = X;
                bn.children.push_back(rejected_leaf(
                    "model (a): plane blowup", NodeKind::model_choice, Xmodel, Rule::quadric_check,
                    "lies on a quadric: h^0(I_X(2)) = 1, so the ideal is not generated by cubics alone",
                    {"(8;3^2,2^9)"},
                    {
                        "X = P^2(p_1..p_11) embedded by (8;3^2,2^9)",
                        "quadric membership certified by random instantiation over F_p",
                    }));
                bn.children.push_back(rejected_leaf(
                    "model (b): ruled blowup", NodeKind::model_choice, Xmodel, Rule::quadric_check,
                    "replaning F_0(5,5;2^10) yields the divisor class (8;3^2,2^9) of model (a); the quadric found there applies, and the coordinate ring is not arithmetically Cohen-Macaulay",
                    {},
                    {
                        "X = F_e(p_1..p_10) embedded by (5,2e+5;2^10); degree 10 forces e = 0",
                        "taking C_0 = L - E_2 and f = L - E_1 identifies F_0(5,5;2^10) with the plane model (8;3^2,2^9)",
                        "recorded as not arithmetically Cohen-Macaulay; no separate computation is run for this model",
                    }));
                tn.children.push_back(std::move(bn));
            } else if (t == -1 && k1 == 0) {
                IntersectionData X2 = adjunction_step(X1, 0);
                int64_t residue_at_chi1 = double_point_residue(X2.H2, X2.HK, 0, 1);
                tn.children.push_back(rejected_leaf(
                    lbl, NodeKind::adjoint_case, X1, Rule::double_point,
                    "a smooth surface in P^4 must satisfy the double-point formula; the residue -16 + 12 chi never vanishes (3 chi = 4 has no integer solution)",
                    {},
                    {
                        "second adjunction: h^0(H_1+K_1) = 5 maps X_1 to a surface X_2 in P^4 with (H_2^2, H_2.K_2, K_2^2) = (" +
                            std::to_string(X2.H2) + ", " + std::to_string(X2.HK) +
                            ", 0) (Hodge bound 0 and K_2^2 >= K_1^2 = 0)",
                        "double-point residue at chi = 1: " + std::to_string(residue_at_chi1),
                    }));
            } else if (t == -1 && k1 == -1) {
                IntersectionData X2 = adjunction_step(X1, 0);
                // Double-point formula on X_2 in P^4: residue = -2 - 2 K_2^2, so K_2^2 = -1.
                int64_t k2sq = -1;
                IntersectionData X2full = adjunction_step(X1, k2sq - X1.K2);
                X1.chi_top = 12 - k1;
                tn.children.push_back(accepted_leaf(
                    lbl, NodeKind::adjoint_case, X1, family_name(-1),
                    {
                        "second adjunction maps X_1 to X_2 in P^4 with (H_2^2, H_2.K_2) = (" +
                            std::to_string(X2.H2) + ", " + std::to_string(X2.HK) +
                            "); the double-point formula forces K_2^2 = -1",
                        "third adjunction: h^0(H_2+K_2) = chi + pi_2 - 1 = " +
                            std::to_string(adjoint_h0(1, X2full.sectional_genus())) +
                            " maps X_2 birationally onto P^2",
                        "9 - K^2 = 10 exceptional divisors; X = P^2(p_1..p_10) embedded by (10;3^10)",
                        "chi_top(X) = 3 + 10 = 13",
                    }));
            } else {
                throw std::logic_error("classify: unhandled sub-case in the decision tree");
            }
        }
        root.children.push_back(std::move(tn));
    }
    return root;
}

// ---------------------------------------------------------------------------
// Tree queries.
// ---------------------------------------------------------------------------

inline void collect_nodes(const ClassificationNode& n,
                          std::vector<const ClassificationNode*>& out) {
    out.push_back(&n);
    for (const ClassificationNode& c : n.children) collect_nodes(c, out);
}

inline std::vector<std::string> accepted_family_names(const ClassificationNode& root) {
    std::vector<const ClassificationNode*> nodes;
    collect_nodes(root, nodes);
    std::vector<std::string> out;
    for (const ClassificationNode* n : nodes)
        if (n->verdict == Verdict::accepted) out.push_back(n->family);
    return out;
}

inline std::vector<std::string> quadric_check_model_names(const ClassificationNode& root) {
    std::vector<const ClassificationNode*> nodes;
    collect_nodes(root, nodes);
    std::vector<std::string> out;
    for (const ClassificationNode* n : nodes)
        for (const std::string& m : n->quadric_check_models) out.push_back(m);
    return out;
}

/// Certifies a quadric_check rejection by constructing the named model over
/// F_p and confirming that the space of quadrics through it is 1-dimensional.
inline bool rejection_certified_by_quadric(const std::string& model_name, uint64_t seed,
                                           const PrimeField& F) {
    for (const RejectedFamily& rf : rejected_families()) {
        if (rf.name != model_name) continue;
        Ideal q = rejected_family_quadrics(rf, seed, F);
        return q.gens().size() == 1 && h0_twist(q, 2, F) == 1;
    }
    throw std::invalid_argument("classify: unknown rejected-family model " + model_name);
}

// ---------------------------------------------------------------------------
// Emission: indented text and JSON.
// ---------------------------------------------------------------------------

namespace detail {

inline void classification_text_rec(const ClassificationNode& n, int depth, std::string& out) {
    std::string pad(static_cast<size_t>(2 * depth), ' ');
    out += pad + n.label + "  [H^2 = " + std::to_string(n.data.H2) +
           ", H.K = " + std::to_string(n.data.HK) + ", K^2 = " + std::to_string(n.data.K2) +
           "; genus " + std::to_string(n.data.sectional_genus()) + "; P^" +
           std::to_string(n.ambient_dim) + "]\n";
    std::string verdict_line = pad + "  ";
    switch (n.verdict) {
        case Verdict::accepted:
            verdict_line += "ACCEPTED -> " + n.family + "  (rule: " + rule_name(n.rule) + ")";
            break;
        case Verdict::rejected:
            verdict_line += "REJECTED (rule: " + std::string(rule_name(n.rule)) + "): " + n.reason;
            if (n.needs_computation) verdict_line += "  [needs computation]";
            break;
        case Verdict::branch:
            verdict_line += "branch (rule: " + std::string(rule_name(n.rule)) + ")";
            break;
    }
    out += verdict_line + "\n";
    for (const std::string& a : n.annotations) out += pad + "  - " + a + "\n";
    for (const ClassificationNode& c : n.children) classification_text_rec(c, depth + 1, out);
}

} // namespace detail

inline std::string classification_text(const ClassificationNode& root) {
    std::string out;
    detail::classification_text_rec(root, 0, out);
    return out;
}

inline nlohmann::ordered_json classification_json(const ClassificationNode& n) {
    nlohmann::ordered_json j;
    j["label"] = n.label;
    j["kind"] = node_kind_name(n.kind);
    j["matrix"] = {{n.data.H2, n.data.HK}, {n.data.HK, n.data.K2}};
    j["chi"] = n.data.chi;
    j["q"] = n.data.q;
    j["p_g"] = n.data.p_g;
    if (n.data.chi_top) j["chi_top"] = *n.data.chi_top;
    j["sectional_genus"] = n.data.sectional_genus();
    j["ambient"] = "P^" + std::to_string(n.ambient_dim);
    j["rule"] = rule_name(n.rule);
    j["verdict"] = verdict_name(n.verdict);
    if (n.verdict == Verdict::accepted) j["family"] = n.family;
    if (n.verdict == Verdict::rejected) {
        j["reason"] = n.reason;
        j["needs_computation"] = n.needs_computation;
        if (!n.quadric_check_models.empty()) j["models"] = n.quadric_check_models;
    }
    if (!n.annotations.empty()) j["annotations"] = n.annotations;
    if (!n.children.empty()) {
        nlohmann::ordered_json kids = nlohmann::ordered_json::array();
        for (const ClassificationNode& c : n.children) kids.push_back(classification_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

// ---------------------------------------------------------------------------
// The summary table of families inside cubic fourfolds.
// ---------------------------------------------------------------------------

/// One family row: K^2, the blowup model (or "Enriques"), the topological
/// Euler number, the self-intersection inside a cubic fourfold through the
/// surface, the lattice discriminant, and the expected h^0 of the normal
/// bundle in that fourfold.
struct Table1Row {
    int t = 0;
    std::string model;
    int64_t chi_top = 0;
    int64_t self_intersection = 0;
    int64_t delta = 0;
    int64_t normal_sections = 0;
};

/// Builds the seven rows from the blowup models and checks the two
/// independent routes to the self-intersection (topological via chi_top,
/// lattice-theoretic via the discriminant record) against each other.
inline std::vector<Table1Row> table1_rows() {
    std::vector<Table1Row> rows;
    for (int t = -6; t <= 0; ++t) {
        Table1Row r;
        r.t = t;
        if (t == 0) {
            r.model = "Enriques";
            r.chi_top = 12;
        } else {
            PlaneSpec s = family_spec(t);
            BlowupInvariants inv = blowup_invariants(s);
            if (inv.degree != 10 || inv.genus != 6 || inv.k2 != t)
                throw std::logic_error("table1: blowup model invariants disagree with the row key");
            r.model = format_plane_system(s);
            r.chi_top = chi_top_blowup(3, static_cast<int64_t>(s.mults.size()));
        }
        r.self_intersection = 6 * 10 + 3 * 0 + t - r.chi_top;
        DiscriminantRecord dr = discriminant_invariants(t);
        if (r.self_intersection != dr.X2)
            throw std::logic_error("table1: self-intersection disagrees with the discriminant record");
        r.delta = dr.delta;
        r.normal_sections = expected_normal_sections(t);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace surf10

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "surf10/classify.hpp"

using namespace surf10;

namespace {

/// Pre-order walk collecting (parent, child) pairs.
void collect_edges(const ClassificationNode& n,
                   std::vector<std::pair<const ClassificationNode*, const ClassificationNode*>>& out) {
    for (const ClassificationNode& c : n.children) {
        out.emplace_back(&n, &c);
        collect_edges(c, out);
    }
}

const ClassificationNode& child_labeled(const ClassificationNode& n, const std::string& label) {
    for (const ClassificationNode& c : n.children)
        if (c.label == label) return c;
    FAIL("no child labeled " + label);
    return n; // unreachable
}

} // namespace

TEST_CASE("Euler characteristic of the twisted ideal sheaf") {
    CHECK(chi_ideal_twist(10, 6, 0, 0, 3) == 10);
    CHECK(chi_ideal_twist(10, 6, 0, 0, 2) == 0);
    CHECK(chi_ideal_twist(10, 6, 0, 0, 0) == 0);
    // degree-9 genus-6 surface in the P^4 construction: 15 quintics
    CHECK(binomial(5 + 4, 4) - binomial(6, 2) * 9 + 5 * (6 - 1) - 1 == 15);
}

TEST_CASE("H.K from the sectional genus") {
    CHECK(hk_from_genus(10, 6) == 0);
    CHECK(hk_from_genus(9, 6) == 1);
    CHECK(hk_from_genus(4, 0) == -6);
}

TEST_CASE("Hodge index bound on K^2") {
    CHECK(hodge_bound(10, 0) == 0);
    CHECK(hodge_bound(4, -6) == 9);
    CHECK(hodge_bound(1, 0) == 0);
    CHECK(hodge_bound(7, -1) == 0);
    CHECK(hodge_bound(3, -3) == 3);
    CHECK(hodge_bound(2, -4) == 8);
    CHECK_THROWS_AS(hodge_bound(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(hodge_bound(-2, 1), std::invalid_argument);
}

TEST_CASE("adjunction step") {
    IntersectionData x{10, 0, -6, 1, 0, 0, std::nullopt};
    IntersectionData y = adjunction_step(x, 15);
    CHECK(y.H2 == 4);
    CHECK(y.HK == -6);
    CHECK(y.K2 == 9);
    CHECK(y.chi == 1);
    CHECK(y.q == 0);
    CHECK(y.p_g == 0);
    CHECK_FALSE(y.chi_top.has_value());

    IntersectionData x5{10, 0, -5, 1, 0, 0, 17};
    IntersectionData y5 = adjunction_step(x5, 10);
    CHECK(y5.H2 == 5);
    CHECK(y5.HK == -5);
    CHECK(y5.K2 == 5);
    REQUIRE(y5.chi_top.has_value());
    CHECK(*y5.chi_top == 7);  // 17 - 10 contracted lines

    // a = 0 changes only the polarization, not K^2
    IntersectionData z = adjunction_step(x, 0);
    CHECK(z.K2 == x.K2);
    CHECK(z.H2 == x.H2 + 2 * x.HK + x.K2);
    CHECK(z.HK == x.HK + x.K2);
}

TEST_CASE("dimension of the adjoint system") {
    CHECK(adjoint_h0(1, 6) == 6);
    CHECK(adjoint_h0(1, 4) == 4);
    CHECK(adjoint_h0(1, 3) == 3);
    CHECK(adjoint_h0(1, 1) == 1);
}

TEST_CASE("double-point residue") {
    CHECK(double_point_residue(7, -1, 0, 1) == -4);   // -16 + 12 chi at chi = 1
    CHECK(double_point_residue(7, -1, 0, 2) == 8);    // never zero: 3 chi = 4
    CHECK(double_point_residue(6, -2, -1, 1) == 0);   // the surviving P^4 surface
    CHECK(double_point_residue(0, 0, 0, 0) == 0);
}

TEST_CASE("discriminants of the cubic-fourfold lattices") {
    DiscriminantRecord a = discriminant_invariants(-6);
    CHECK(a.X2 == 36);
    CHECK(a.delta == 8);
    DiscriminantRecord b = discriminant_invariants(0);
    CHECK(b.X2 == 48);
    CHECK(b.delta == 44);
    DiscriminantRecord c = discriminant_invariants(-3);
    CHECK(c.X2 == 42);
    CHECK(c.delta == 26);
    CHECK_THROWS_AS(discriminant_invariants(-7), std::invalid_argument);
    CHECK_THROWS_AS(discriminant_invariants(1), std::invalid_argument);
    for (int t = -6; t <= 0; ++t) {
        DiscriminantRecord r = discriminant_invariants(t);
        CHECK(r.X2 == 48 + 2 * t);
        CHECK(r.delta == 44 + 6 * t);
        CHECK(r.delta % 6 == 2);
        CHECK(r.delta > 6);
        CHECK(r.delta <= 44);
    }
}

TEST_CASE("expected normal-bundle sections and blowup Euler numbers") {
    CHECK(expected_normal_sections(-6) == 12);
    CHECK(expected_normal_sections(-1) == 2);
    CHECK(expected_normal_sections(0) == 0);
    CHECK(chi_top_blowup(3, 15) == 18);
    CHECK(chi_top_blowup(3, 14) == 17);
    CHECK(chi_top_blowup(4, 9) == 13);
}

TEST_CASE("admissible windows for the adjoint K^2") {
    auto window = [](int t) {
        IntersectionData x{10, 0, t, 1, 0, 0, std::nullopt};
        return adjoint_k2_window(x);
    };
    CHECK(window(-6).lo == 8);
    CHECK(window(-6).hi == 9);
    CHECK(window(-5).lo == 5);
    CHECK(window(-5).hi == 5);
    CHECK(window(-4).lo == 2);
    CHECK(window(-4).hi == 2);
    CHECK(window(-3).lo == -1);
    CHECK(window(-3).hi == 1);
    CHECK(window(-2).lo == -2);
    CHECK(window(-2).hi == 0);
    CHECK(window(-1).lo == -1);
    CHECK(window(-1).hi == 0);
}

TEST_CASE("plane-system formatting") {
    CHECK(format_plane_system(PlaneSpec{2, {}}) == "(2)");
    CHECK(format_plane_system(PlaneSpec{4, {2, 1, 1, 1, 1, 1, 1}}) == "(4;2,1^6)");
    CHECK(family_name(-6) == "(5;1^15)");
    CHECK(family_name(-5) == "(6;2^4,1^10)");
    CHECK(family_name(-4) == "(7;3,2^6,1^6)");
    CHECK(family_name(-3) == "(7;2^9,1^3)");
    CHECK(family_name(-2) == "(9;3^6,2^4,1)");
    CHECK(family_name(-1) == "(10;3^10)");
}

TEST_CASE("classical lookup table reproduces its own keys") {
    const std::vector<SurfaceClassEntry>& table = surface_class_table();
    REQUIRE(table.size() == 10);
    for (const SurfaceClassEntry& e : table) {
        INFO(e.description);
        CHECK_FALSE(e.citation.empty());
        if (e.plane) {
            BlowupInvariants inv = blowup_invariants(*e.plane);
            CHECK(inv.degree == e.degree);
            CHECK(inv.genus == e.genus);
            CHECK(inv.k2 == e.k2);
        }
        if (e.ruled) {
            BlowupInvariants inv = blowup_invariants(*e.ruled);
            CHECK(inv.degree == e.degree);
            CHECK(inv.genus == e.genus);
            CHECK(inv.k2 == e.k2);
        }
    }
    const SurfaceClassEntry* veronese = surface_class_lookup(4, 0, 9);
    REQUIRE(veronese != nullptr);
    CHECK(veronese->description == "Veronese surface");
    const SurfaceClassEntry* enriques = surface_class_lookup(10, 6, 0);
    REQUIRE(enriques != nullptr);
    CHECK_FALSE(enriques->plane.has_value());
    CHECK_FALSE(enriques->ruled.has_value());
    CHECK(surface_class_lookup(11, 6, 0) == nullptr);
}

TEST_CASE("decision tree: shape, verdicts, and data consistency") {
    ClassificationNode root = classify();
    CHECK_THROWS_AS(classify(9, 6), std::invalid_argument);

    REQUIRE(root.children.size() == 7);
    CHECK(root.kind == NodeKind::root);
    CHECK(root.data.H2 == 10);
    CHECK(root.data.HK == 0);
    CHECK(root.data.sectional_genus() == 6);

    std::vector<const ClassificationNode*> nodes;
    collect_nodes(root, nodes);
    CHECK(nodes.size() == 22);

    int accepted = 0, rejected = 0, leaves = 0;
    for (const ClassificationNode* n : nodes) {
        INFO(n->label);
        CHECK(n->data.chi == 1);
        CHECK(n->data.q == 0);
        CHECK(n->data.p_g == 0);
        if (n->children.empty()) {
            ++leaves;
            CHECK(n->verdict != Verdict::branch);
        } else {
            CHECK(n->verdict == Verdict::branch);
        }
        if (n->verdict == Verdict::accepted) {
            ++accepted;
            CHECK_FALSE(n->family.empty());
            CHECK(n->rule == Rule::lookup);
        }
        if (n->verdict == Verdict::rejected) {
            ++rejected;
            CHECK_FALSE(n->reason.empty());
            CHECK(n->needs_computation == !n->quadric_check_models.empty());
        }
    }
    CHECK(leaves == 14);
    CHECK(accepted == 7);
    CHECK(rejected == 7);

    CHECK(accepted_family_names(root) ==
          std::vector<std::string>{"(5;1^15)", "(6;2^4,1^10)", "(7;3,2^6,1^6)", "(7;2^9,1^3)",
                                   "(9;3^6,2^4,1)", "(10;3^10)", "Enriques"});
}

TEST_CASE("decision tree: adjunction edges carry the adjunction numerics") {
    ClassificationNode root = classify();
    std::vector<std::pair<const ClassificationNode*, const ClassificationNode*>> edges;
    collect_edges(root, edges);
    int checked = 0;
    for (auto [parent, child] : edges) {
        if (child->kind != NodeKind::adjoint_case) continue;
        IntersectionData expected = adjunction_step(parent->data, child->data.K2 - parent->data.K2);
        INFO(parent->label + " -> " + child->label);
        CHECK(child->data.H2 == expected.H2);
        CHECK(child->data.HK == expected.HK);
        CHECK(child->data.K2 == expected.K2);
        CHECK(child->data.K2 >= parent->data.K2);  // the blow-down count is non-negative
        ++checked;
    }
    CHECK(checked == 12);

    // model_choice children carry the original surface's data, not an adjoint's
    for (auto [parent, child] : edges) {
        if (child->kind != NodeKind::model_choice) continue;
        CHECK(child->data.H2 == 10);
        CHECK(child->data.HK == 0);
        CHECK(child->data.K2 == -2);
    }
}

TEST_CASE("decision tree: the individual case analyses") {
    ClassificationNode root = classify();

    const ClassificationNode& t6 = child_labeled(root, "K^2 = -6");
    CHECK(t6.rule == Rule::hodge);
    REQUIRE(t6.children.size() == 2);
    const ClassificationNode& quadric18 = child_labeled(t6, "K_1^2 = 8");
    CHECK(quadric18.verdict == Verdict::rejected);
    CHECK(quadric18.rule == Rule::quadric_check);
    CHECK(quadric18.needs_computation);
    CHECK(quadric18.quadric_check_models == std::vector<std::string>{"F0(4,3;1^14)"});
    const ClassificationNode& veronese = child_labeled(t6, "K_1^2 = 9");
    CHECK(veronese.verdict == Verdict::accepted);
    CHECK(veronese.family == "(5;1^15)");
    REQUIRE(veronese.data.chi_top.has_value());
    CHECK(*veronese.data.chi_top == 3);  // the Veronese is P^2

    const ClassificationNode& t5 = child_labeled(root, "K^2 = -5");
    CHECK(t5.rule == Rule::adjoint_positivity);  // the window collapses to K_1^2 = 5
    REQUIRE(t5.children.size() == 1);
    CHECK(t5.children[0].verdict == Verdict::accepted);
    CHECK(t5.children[0].family == "(6;2^4,1^10)");

    const ClassificationNode& t4 = child_labeled(root, "K^2 = -4");
    CHECK(t4.rule == Rule::adjoint_positivity);
    REQUIRE(t4.children.size() == 1);
    CHECK(t4.children[0].family == "(7;3,2^6,1^6)");

    const ClassificationNode& t3 = child_labeled(root, "K^2 = -3");
    REQUIRE(t3.children.size() == 3);
    CHECK(child_labeled(t3, "K_1^2 = 1").quadric_check_models ==
          std::vector<std::string>{"(9;3^7,2,1^4)"});
    CHECK(child_labeled(t3, "K_1^2 = 0").family == "(7;2^9,1^3)");
    CHECK(child_labeled(t3, "K_1^2 = -1").quadric_check_models ==
          std::vector<std::string>{"F0(4,6;2^9,1^2)", "F1(4,8;2^9,1^2)"});

    const ClassificationNode& t2 = child_labeled(root, "K^2 = -2");
    REQUIRE(t2.children.size() == 3);
    const ClassificationNode& quartic = child_labeled(t2, "K_1^2 = 0");
    CHECK(quartic.verdict == Verdict::rejected);
    CHECK(quartic.rule == Rule::prop2_5_nonexistence);
    CHECK_FALSE(quartic.needs_computation);
    CHECK(child_labeled(t2, "K_1^2 = -1").family == "(9;3^6,2^4,1)");
    const ClassificationNode& quadricSurf = child_labeled(t2, "K_1^2 = -2");
    CHECK(quadricSurf.verdict == Verdict::branch);
    REQUIRE(quadricSurf.children.size() == 2);
    const ClassificationNode& modelA = child_labeled(quadricSurf, "model (a): plane blowup");
    CHECK(modelA.needs_computation);
    CHECK(modelA.quadric_check_models == std::vector<std::string>{"(8;3^2,2^9)"});
    const ClassificationNode& modelB = child_labeled(quadricSurf, "model (b): ruled blowup");
    CHECK(modelB.verdict == Verdict::rejected);
    CHECK_FALSE(modelB.needs_computation);
    CHECK(modelB.quadric_check_models.empty());
    CHECK(modelB.reason.find("Cohen-Macaulay") != std::string::npos);

    const ClassificationNode& t1 = child_labeled(root, "K^2 = -1");
    REQUIRE(t1.children.size() == 2);
    const ClassificationNode& dp = child_labeled(t1, "K_1^2 = 0");
    CHECK(dp.verdict == Verdict::rejected);
    CHECK(dp.rule == Rule::double_point);
    CHECK(child_labeled(t1, "K_1^2 = -1").family == "(10;3^10)");

    const ClassificationNode& t0 = child_labeled(root, "K^2 = 0");
    CHECK(t0.verdict == Verdict::accepted);
    CHECK(t0.family == "Enriques");
    REQUIRE(t0.data.chi_top.has_value());
    CHECK(*t0.data.chi_top == 12);
}

TEST_CASE("every quadric_check model is a known rejected family") {
    ClassificationNode root = classify();
    std::vector<std::string> models = quadric_check_model_names(root);
    std::set<std::string> model_set(models.begin(), models.end());
    CHECK(model_set.size() == models.size());  // no duplicates across the tree

    std::set<std::string> known;
    for (const RejectedFamily& rf : rejected_families()) known.insert(rf.name);
    CHECK(model_set == known);

    CHECK_THROWS_AS(rejection_certified_by_quadric("(999;1)", 1, PrimeField(31991)),
                    std::invalid_argument);
}

TEST_CASE("a quadric_check rejection is certified live") {
    PrimeField F(31991);
    CHECK(rejection_certified_by_quadric("F0(4,3;1^14)", 31, F));
}

TEST_CASE("summary table of the seven families") {
    std::vector<Table1Row> rows = table1_rows();
    REQUIRE(rows.size() == 7);

    auto expect = [&](int idx, int t, const std::string& model, int64_t chi_top, int64_t X2,
                      int64_t delta, int64_t h0N) {
        INFO("row " << idx);
        CHECK(rows[idx].t == t);
        CHECK(rows[idx].model == model);
        CHECK(rows[idx].chi_top == chi_top);
        CHECK(rows[idx].self_intersection == X2);
        CHECK(rows[idx].delta == delta);
        CHECK(rows[idx].normal_sections == h0N);
    };
    expect(0, -6, "(5;1^15)", 18, 36, 8, 12);
    expect(1, -5, "(6;2^4,1^10)", 17, 38, 14, 10);
    expect(2, -4, "(7;3,2^6,1^6)", 16, 40, 20, 8);
    expect(3, -3, "(7;2^9,1^3)", 15, 42, 26, 6);
    expect(4, -2, "(9;3^6,2^4,1)", 14, 44, 32, 4);
    expect(5, -1, "(10;3^10)", 13, 46, 38, 2);
    expect(6, 0, "Enriques", 12, 48, 44, 0);

    // the accepted leaves of the tree and the table rows name the same families
    ClassificationNode root = classify();
    std::vector<std::string> accepted = accepted_family_names(root);
    REQUIRE(accepted.size() == rows.size());
    std::set<std::string> from_tree(accepted.begin(), accepted.end());
    std::set<std::string> from_table;
    for (const Table1Row& r : rows) from_table.insert(r.model);
    CHECK(from_tree == from_table);
}

TEST_CASE("tree emission: JSON and text") {
    ClassificationNode root = classify();

    nlohmann::ordered_json j = classification_json(root);
    CHECK(j["label"] == "X in P^5: degree 10, sectional genus 6");
    CHECK(j["matrix"] == nlohmann::ordered_json({{10, 0}, {0, 0}}));
    CHECK(j["chi"] == 1);
    CHECK(j["ambient"] == "P^5");
    CHECK(j["rule"] == "hodge");
    CHECK(j["verdict"] == "branch");
    REQUIRE(j["children"].size() == 7);
    CHECK(j["children"][6]["family"] == "Enriques");
    CHECK(j["children"][6]["chi_top"] == 12);
    CHECK(j["children"][0]["children"][0]["needs_computation"] == true);
    // serialization round-trips through the parser
    nlohmann::ordered_json round = nlohmann::ordered_json::parse(j.dump());
    CHECK(round == j);

    std::string text = classification_text(root);
    CHECK(text.find("ACCEPTED -> (5;1^15)") != std::string::npos);
    CHECK(text.find("ACCEPTED -> Enriques") != std::string::npos);
    CHECK(text.find("REJECTED (rule: double_point)") != std::string::npos);
    CHECK(text.find("REJECTED (rule: prop2_5_nonexistence)") != std::string::npos);
    CHECK(text.find("[needs computation]") != std::string::npos);
}

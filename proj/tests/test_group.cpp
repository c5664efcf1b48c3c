#include "doctest.h"

#include <random>
#include <set>

#include "affprym/group.hpp"

using namespace affprym;
using group::AffGroup;
using group::ClassId;
using group::SubgroupType;

TEST_CASE("composition follows tau_b lam_k . tau_c lam_j = tau_{b+a^k c} lam_{k+j}") {
    auto G = AffGroup::build(3, 1);  // q = 3, alpha = 2
    int lam = G.make(0, 1), tau = G.make(1, 0);
    int lt = G.compose(lam, tau);  // x -> 2x + 2
    CHECK(G.b_of(lt) == 2);
    CHECK(G.k_of(lt) == 1);

    auto G5 = AffGroup::build(5, 1);
    for (int g = 0; g < G5.order(); ++g) CHECK(G5.compose(G5.identity(), g) == g);

    auto G9 = AffGroup::build(3, 2);
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> dist(0, G9.order() - 1);
    for (int i = 0; i < 100; ++i) {
        int g = dist(rng);
        CHECK(G9.compose(g, G9.inverse(g)) == G9.identity());
        CHECK(G9.compose(G9.inverse(g), g) == G9.identity());
    }
}

TEST_CASE("element orders") {
    auto G8 = AffGroup::build(2, 3);
    CHECK(G8.element_order(G8.make(1, 0)) == 2);  // translations have order p
    auto G9 = AffGroup::build(3, 2);
    CHECK(G9.element_order(G9.make(0, 1)) == 8);
    for (int b = 0; b < 9; ++b) CHECK(G9.element_order(G9.make(b, 2)) == 4);
    CHECK(G9.element_order(G9.identity()) == 1);
}

TEST_CASE("conjugacy classes") {
    auto G9 = AffGroup::build(3, 2);
    for (int b = 1; b < 9; ++b) CHECK(G9.class_of(G9.make(b, 0)) == ClassId::tau());
    for (int c = 0; c < 9; ++c) CHECK(G9.class_of(G9.make(c, 3)) == ClassId::lambda(3));
    CHECK(G9.class_of(G9.identity()) == ClassId::identity());
    CHECK(G9.classes().size() == 9);

    auto G5 = AffGroup::build(5, 1);
    std::vector<long long> sizes;
    for (const auto& c : G5.classes()) sizes.push_back(c.size);
    CHECK(sizes == std::vector<long long>{1, 4, 5, 5, 5});

    auto G2 = AffGroup::build(2, 1);
    sizes.clear();
    for (const auto& c : G2.classes()) sizes.push_back(c.size);
    CHECK(sizes == std::vector<long long>{1, 1});
}

TEST_CASE("rational classes") {
    CHECK(AffGroup::build(3, 2).rational_classes().size() == 5);
    CHECK(AffGroup::build(2, 1).rational_classes().size() == 2);
    CHECK(AffGroup::build(7, 1).rational_classes().size() == 5);
}

TEST_CASE("minimal subfield degrees") {
    auto G9 = AffGroup::build(3, 2);
    CHECK(G9.min_subfield_degree(1) == 1);
    CHECK(G9.min_subfield_degree(2) == 1);
    CHECK(G9.min_subfield_degree(4) == 2);
    CHECK(G9.min_subfield_degree(8) == 2);
}

TEST_CASE("admissible subgroup types") {
    auto types = [](const AffGroup& G) {
        std::vector<std::pair<int, int>> out;
        for (const auto& t : G.subgroup_types()) out.emplace_back(t.d, t.k);
        return out;
    };
    CHECK(types(AffGroup::build(3, 2)) ==
          std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1},
                                           {2, 2}, {4, 0}, {4, 2}, {8, 0}, {8, 2}});
    CHECK(types(AffGroup::build(2, 1)) == std::vector<std::pair<int, int>>{{1, 0}, {1, 1}});
    CHECK(types(AffGroup::build(2, 2)) ==
          std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {3, 0}, {3, 2}});
}

TEST_CASE("type containment") {
    auto G = AffGroup::build(3, 2);
    CHECK(AffGroup::type_contains(G.type(2, 0), G.type(4, 2)));
    CHECK(!AffGroup::type_contains(G.type(4, 0), G.type(2, 2)));
    for (const auto& t : G.subgroup_types()) CHECK(AffGroup::type_contains(t, t));
}

TEST_CASE("realize_subgroup") {
    auto G4 = AffGroup::build(2, 2);
    CHECK(G4.realize_subgroup(G4.type(3, 2)).elements.size() == 12);  // the whole group
    CHECK(G4.realize_subgroup(G4.type(1, 0)).elements ==
          std::vector<int>{G4.identity()});
    auto G9 = AffGroup::build(3, 2);
    auto H = G9.realize_subgroup(G9.type(2, 1));
    CHECK(H.elements.size() == 6);
    CHECK_THROWS_AS(G9.type(4, 1), Error);  // 4 needs the degree-2 subfield
}

TEST_CASE("Hasse diagram of types") {
    auto G2 = AffGroup::build(2, 1);
    auto e2 = G2.type_lattice_edges();
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].first.to_string() == "(1,0)");
    CHECK(e2[0].second.to_string() == "(1,1)");

    // transitive reduction of the q=5 type order, derived by hand
    auto G5 = AffGroup::build(5, 1);
    std::vector<std::pair<std::string, std::string>> expect{
        {"(1,0)", "(1,1)"}, {"(1,0)", "(2,0)"}, {"(1,1)", "(2,1)"}, {"(2,0)", "(2,1)"},
        {"(2,0)", "(4,0)"}, {"(2,1)", "(4,1)"}, {"(4,0)", "(4,1)"}};
    std::vector<std::pair<std::string, std::string>> got;
    for (const auto& [a, b] : G5.type_lattice_edges())
        got.emplace_back(a.to_string(), b.to_string());
    CHECK(got == expect);
}

TEST_CASE("closure and type_of_order") {
    auto G5 = AffGroup::build(5, 1);
    CHECK(G5.closure({G5.make(0, 1), G5.make(1, 0)}).size() == 20);
    auto G9 = AffGroup::build(3, 2);
    auto t = G9.type_of_order(6);
    REQUIRE(t.has_value());
    CHECK(t->d == 2);
    CHECK(t->k == 1);
    CHECK(!G9.type_of_order(5).has_value());
}

TEST_CASE("type names") {
    auto G9 = AffGroup::build(3, 2);
    CHECK(G9.type_name(G9.type(8, 2)) == "G");
    CHECK(G9.type_name(G9.type(1, 2)) == "T");
    CHECK(G9.type_name(G9.type(8, 0)) == "Λ_8");
    CHECK(G9.type_name(G9.type(2, 2)) == "T⋊Λ_2");
    CHECK(G9.type_name(G9.type(2, 1)) == "V1⋊Λ_2");
    CHECK(G9.type_name(G9.type(1, 0)) == "Λ_1");
}

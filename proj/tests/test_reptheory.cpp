#include "doctest.h"

#include <numeric>

#include "affprym/reptheory.hpp"

using namespace affprym;
using cyclo::CycloNumber;
using group::AffGroup;
using group::ClassId;

TEST_CASE("psi characters") {
    auto G7 = AffGroup::build(7, 1);
    auto triv = reptheory::psi_character(G7, 6);
    for (const auto& v : triv.values) CHECK(v == CycloNumber::one(6));

    auto G9 = AffGroup::build(3, 2);
    auto psi1 = reptheory::psi_character(G9, 1);
    CHECK(psi1.value(G9, ClassId::lambda(1)) == CycloNumber::root_of_unity(8, 1));
    auto psi2 = reptheory::psi_character(G9, 2);
    CHECK(psi2.value(G9, ClassId::lambda(2)) == CycloNumber::from_rational(8, -1));
}

TEST_CASE("theta character and its induction oracle") {
    auto G9 = AffGroup::build(3, 2);
    auto theta = reptheory::theta_character(G9);
    CHECK(theta.value(G9, ClassId::identity()) == CycloNumber::from_rational(1, 8));
    CHECK(theta.value(G9, ClassId::tau()) == CycloNumber::from_rational(1, -1));
    CHECK(reptheory::inner_product(G9, theta, theta) == 1);

    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        auto G = AffGroup::build(p, n);
        auto a = reptheory::theta_character(G);
        auto b = reptheory::theta_by_induction(G);
        for (size_t i = 0; i < a.values.size(); ++i) {
            int M = std::lcm(a.values[i].order(), b.values[i].order());
            CHECK(a.values[i].lift(M) == b.values[i].lift(M));
        }
    }
}

TEST_CASE("theta by induction has the expected small tables") {
    auto G3 = AffGroup::build(3, 1);
    auto t3 = reptheory::theta_by_induction(G3);
    CHECK(*t3.values[0].as_rational() == 2);
    CHECK(*t3.values[1].as_rational() == -1);
    CHECK(*t3.values[2].as_rational() == 0);
    auto G4 = AffGroup::build(2, 2);
    auto t4 = reptheory::theta_by_induction(G4);
    CHECK(*t4.values[0].as_rational() == 3);
    CHECK(*t4.values[1].as_rational() == -1);
    CHECK(*t4.values[2].as_rational() == 0);
    CHECK(*t4.values[3].as_rational() == 0);
}

TEST_CASE("xi characters are integral Galois sums") {
    auto G9 = AffGroup::build(3, 2);
    auto xi4 = reptheory::xi_character(G9, 4);
    CHECK(xi4.degree() == 1);  // gcd(k,8)=4 only at k=4
    CHECK(*xi4.value(G9, ClassId::lambda(1)).as_rational() == -1);
    auto xi1 = reptheory::xi_character(G9, 1);
    CHECK(xi1.degree() == 4);
    for (const auto& v : xi1.values) CHECK(is_integer(*v.as_rational()));
    CHECK_THROWS_AS(reptheory::xi_character(G9, 3), Error);
}

TEST_CASE("inner products") {
    auto G9 = AffGroup::build(3, 2);
    for (int j = 1; j <= 8; ++j) {
        auto psi = reptheory::psi_character(G9, j);
        CHECK(reptheory::inner_product(G9, psi, psi) == 1);
    }
    CHECK(reptheory::inner_product(G9, reptheory::psi_character(G9, 1),
                                   reptheory::theta_character(G9)) == 0);
    auto xi1 = reptheory::xi_character(G9, 1);
    CHECK(reptheory::inner_product(G9, xi1, xi1) == 4);
}

TEST_CASE("brute-force induced characters") {
    auto G9 = AffGroup::build(3, 2);
    auto whole = G9.realize_subgroup(G9.type(8, 2));
    auto chi = reptheory::induced_trivial_bruteforce(G9, whole);
    for (const auto& v : chi.values) CHECK(*v.as_rational() == 1);

    auto trivial = G9.realize_subgroup(G9.type(1, 0));
    auto reg = reptheory::induced_trivial_bruteforce(G9, trivial);
    CHECK(*reg.values[0].as_rational() == 72);
    for (size_t i = 1; i < reg.values.size(); ++i) CHECK(*reg.values[i].as_rational() == 0);

    auto H = G9.realize_subgroup(G9.type(2, 1));
    CHECK(*reptheory::induced_trivial_bruteforce(G9, H).values[0].as_rational() == 12);
}

TEST_CASE("rho decomposition closed form") {
    auto G9 = AffGroup::build(3, 2);
    auto dec = reptheory::rho_decomposition_closed(G9, G9.type(1, 1));
    CHECK(dec.to_string(8) == "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ ξ_1 ⊕ 2θ");
    CHECK(reptheory::rho_decomposition_closed(G9, G9.type(8, 0)).to_string(8) == "1_G ⊕ θ");
    auto whole = reptheory::rho_decomposition_closed(G9, G9.type(8, 2));
    CHECK(whole.to_string(8) == "1_G");
}

TEST_CASE("closed form equals Frobenius brute force on spot checks") {
    auto G9 = AffGroup::build(3, 2);
    CHECK(reptheory::rho_decomposition_bruteforce(G9, G9.type(2, 0)).to_string(8) ==
          "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ 4θ");
    CHECK(reptheory::rho_decomposition_bruteforce(G9, G9.type(1, 2)).to_string(8) ==
          "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ ξ_1");
    auto G3 = AffGroup::build(3, 1);
    CHECK(reptheory::rho_decomposition_bruteforce(G3, G3.type(1, 0)).to_string(2) ==
          "1_G ⊕ ξ_1 ⊕ 2θ");
    for (const auto& t : G9.subgroup_types())
        CHECK(reptheory::rho_decomposition_closed(G9, t) ==
              reptheory::rho_decomposition_bruteforce(G9, t));
}

TEST_CASE("degree bookkeeping") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {2, 3}}) {
        auto G = AffGroup::build(p, n);
        Rational total = 0;
        auto add = [&](const reptheory::Character& chi) { total += chi.degree() * chi.degree(); };
        for (int j = 1; j <= G.q() - 1; ++j) add(reptheory::psi_character(G, j));
        add(reptheory::theta_character(G));
        CHECK(total == G.order());
    }
}

#include "doctest.h"

#include <random>
#include <set>

#include "affprym/gf.hpp"

using namespace affprym;
using gf::FieldTable;

TEST_CASE("prime fields pick the smallest generator") {
    auto F3 = FieldTable::build(3, 1);
    CHECK(F3.alpha() == 2);  // exhaustive order check: 1 has order 1
    CHECK(F3.modulus() == std::vector<int>{0, 1});  // x

    auto F2 = FieldTable::build(2, 1);
    CHECK(F2.alpha() == 1);
    CHECK(F2.q() == 2);
}

TEST_CASE("GF(9) has a primitive element of order 8") {
    auto F = FieldTable::build(3, 2);
    CHECK(F.modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1 is the lex-first irreducible
    std::set<int> powers;
    for (int k = 0; k < 8; ++k) powers.insert(F.exp(k));
    CHECK(powers.size() == 8);
    CHECK(powers.count(0) == 0);
}

TEST_CASE("GF(4) multiplication reduces by x^2 + x + 1") {
    auto F = FieldTable::build(2, 2);
    CHECK(F.modulus() == std::vector<int>{1, 1, 1});
    int alpha = F.alpha();
    CHECK(alpha == F.index_of({{0, 1}}));  // alpha = x
    // alpha^2 = alpha + 1
    CHECK(F.mul(alpha, alpha) == F.index_of({{1, 1}}));
    gf::FieldElement a{{0, 1}};
    CHECK(F.mul(a, a) == gf::FieldElement{{1, 1}});
}

TEST_CASE("inverses") {
    auto F = FieldTable::build(3, 2);
    for (int x = 0; x < 9; ++x) {
        CHECK(F.add(x, F.neg(x)) == 0);
        if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
    }
    CHECK_THROWS_WITH_AS(F.inv(0), doctest::Contains("zero"), Error);
}

TEST_CASE("trace") {
    auto F4 = FieldTable::build(2, 2);
    CHECK(F4.trace(0) == 0);
    CHECK(F4.trace(F4.alpha()) == 1);  // alpha + alpha^2 = 1
    auto F5 = FieldTable::build(5, 1);
    for (int x = 0; x < 5; ++x) CHECK(F5.trace(x) == x);
    // additivity on GF(8)
    auto F8 = FieldTable::build(2, 3);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            CHECK(F8.trace(F8.add(x, y)) == (F8.trace(x) + F8.trace(y)) % 2);
}

TEST_CASE("dlog inverts exp") {
    auto F = FieldTable::build(3, 2);
    CHECK(F.dlog(1) == 0);
    CHECK(F.dlog(F.alpha()) == 1);
    CHECK(F.dlog(F.mul(F.alpha(), F.alpha())) == 2);
    CHECK_THROWS_AS(F.dlog(0), Error);
}

TEST_CASE("build_field rejects bad input") {
    CHECK_THROWS_AS(FieldTable::build(4, 1), Error);
    CHECK_THROWS_AS(FieldTable::build(6, 1), Error);
    CHECK_THROWS_AS(FieldTable::build(2, 11), Error);  // 2048 > 1024
    CHECK_NOTHROW(FieldTable::build(2, 10));
}

TEST_CASE("field axioms on random triples of GF(16)") {
    auto F = FieldTable::build(2, 4);
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> dist(0, 15);
    for (int i = 0; i < 2000; ++i) {
        int x = dist(rng), y = dist(rng), z = dist(rng);
        CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
        CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
        CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
    }
}

TEST_CASE("subfield membership in GF(16)") {
    auto F = FieldTable::build(2, 4);
    int count = 0;
    for (int x = 0; x < 16; ++x)
        if (F.in_subfield(x, 2)) ++count;
    CHECK(count == 4);
}

#include "doctest.h"

#include <random>

#include "affprym/cyclo.hpp"

using namespace affprym;
using cyclo::CycloNumber;

namespace {
std::vector<BigInt> bigs(std::vector<long long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}
} // namespace

TEST_CASE("cyclotomic polynomials by exact division") {
    CHECK(cyclo::cyclotomic_poly(1) == bigs({-1, 1}));
    CHECK(cyclo::cyclotomic_poly(2) == bigs({1, 1}));
    CHECK(cyclo::cyclotomic_poly(6) == bigs({1, -1, 1}));
    CHECK(cyclo::cyclotomic_poly(8) == bigs({1, 0, 0, 0, 1}));
    CHECK(cyclo::cyclotomic_poly(12) == bigs({1, 0, -1, 0, 1}));
}

TEST_CASE("roots of unity") {
    CHECK(CycloNumber::root_of_unity(8, 4) == CycloNumber::from_rational(8, -1));
    CHECK(CycloNumber::root_of_unity(8, 8) == CycloNumber::one(8));
    // full geometric sum vanishes
    CycloNumber sum = CycloNumber::zero(8);
    for (int k = 1; k <= 8; ++k) sum = sum.add(CycloNumber::root_of_unity(8, k));
    CHECK(sum.is_zero());
}

TEST_CASE("conjugation inverts the exponent") {
    CHECK(CycloNumber::root_of_unity(5, 2).conj() == CycloNumber::root_of_unity(5, 3));
    for (int M : {3, 7, 8, 12})
        for (int k = 0; k < M; ++k) {
            auto z = CycloNumber::root_of_unity(M, k);
            CHECK(z.mul(z.conj()) == CycloNumber::one(M));
        }
}

TEST_CASE("lift embeds compatibly") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_elt = [&](int M) {
        std::vector<Rational> c;
        for (int i = 0; i < cyclo::totient(M); ++i) c.emplace_back(coeff(rng));
        return CycloNumber::from_poly(M, c);
    };
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_elt(3), b = random_elt(3);
        CHECK(a.add(b).lift(12) == a.lift(12).add(b.lift(12)));
        CHECK(a.mul(b).lift(12) == a.lift(12).mul(b.lift(12)));
    }
}

TEST_CASE("ring axioms on random elements of Q(zeta_12)") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_elt = [&]() {
        std::vector<Rational> c;
        for (int i = 0; i < cyclo::totient(12); ++i)
            c.push_back(Rational(coeff(rng), 1 + std::abs(coeff(rng))));
        return CycloNumber::from_poly(12, c);
    };
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_elt(), b = random_elt(), c = random_elt();
        CHECK(a.mul(b.mul(c)) == a.mul(b).mul(c));
        CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        CHECK(a.add(b) == b.add(a));
        CHECK(a.mul(b) == b.mul(a));
    }
}

TEST_CASE("rational detection and mixed moduli") {
    CHECK(*CycloNumber::from_rational(8, Rational(3, 2)).as_rational() == Rational(3, 2));
    CHECK(!CycloNumber::root_of_unity(8, 1).as_rational());
    CHECK_THROWS_AS(CycloNumber::one(4).add(CycloNumber::one(8)), Error);
    CHECK_NOTHROW(CycloNumber::one(4).lift(8).add(CycloNumber::one(8)));
    CHECK_THROWS_AS(CycloNumber::one(4).lift(6), Error);
}

TEST_CASE("display form") {
    CHECK(CycloNumber::zero(8).to_string() == "0");
    CHECK(CycloNumber::root_of_unity(8, 1).to_string() == "ζ8");
    CHECK(CycloNumber::root_of_unity(8, 4).to_string() == "-1");
    CHECK(CycloNumber::root_of_unity(6, 2).to_string() == "-1 + ζ6");
    CHECK(CycloNumber::from_rational(8, Rational(3, 2)).to_string() == "3/2");
    auto x = CycloNumber::root_of_unity(8, 2).scalar_mul(Rational(-2));
    CHECK(x.to_string() == "-2·ζ8^2");
}

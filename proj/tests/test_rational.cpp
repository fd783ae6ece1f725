#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solgap/rational.hpp"

#include <random>

using namespace solgap;

TEST_CASE("rationals normalize and format as num/den") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(-6, 4).str() == "-3/2");
    CHECK(Rat(14, 2).str() == "7");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-12") == Rat(-12));
    CHECK(Rat::parse(" 5/10 ") == Rat(1, 2));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(Rat(-5, 2).floor() == BigInt(-3));
    CHECK(Rat(5, 2).floor() == BigInt(2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("prime set validation") {
    PrimeSet s({3, 2});
    CHECK(s.primes() == std::vector<std::int64_t>{2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(5));
    CHECK(PrimeSet{}.empty());  // S = {infinity} is legal
    CHECK_THROWS_AS(PrimeSet({4}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSet({2, 2}), std::invalid_argument);
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(Rat(3, 4), 2) == -2);
    CHECK(padic_valuation(Rat(9), 3) == 2);
    CHECK_FALSE(padic_valuation(Rat(0), 5).has_value());  // +infinity
    CHECK(padic_valuation(Rat(1, 3), 2) == 0);
}

TEST_CASE("p-adic fractional part") {
    // oracle for the spec examples: 3/4 - 3/4 = 0 is 2-integral
    CHECK(fractional_part_p(Rat(3, 4), 2).value() == Rat(3, 4));
    CHECK(fractional_part_p(Rat(1, 3), 2).value() == Rat(0));
    // oracle: exhaustive search over a/4 for -1/4
    {
        Rat q(-1, 4);
        Rat expected(0);
        bool found = false;
        for (int a = 0; a < 4; ++a) {
            Rat r(a, 4);
            auto v = padic_valuation(q - r, 2);
            if (!v || *v >= 0) {
                expected = r;
                found = true;
                break;
            }
        }
        REQUIRE(found);
        CHECK(expected == Rat(3, 4));
        CHECK(fractional_part_p(q, 2).value() == expected);
    }
}

TEST_CASE("fractional part properties on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-4000, 4000);
    std::uniform_int_distribution<int> expo(0, 5);
    for (int iter = 0; iter < 400; ++iter) {
        long long d = (1LL << expo(rng)) * (iter % 3 == 0 ? 3 : 1) * (iter % 5 == 0 ? 7 : 1);
        Rat q(num(rng), d);
        Phase r = fractional_part_p(q, 2);
        // value in [0,1), denominator a power of 2, difference 2-integral
        CHECK(r.value() >= Rat(0));
        CHECK(r.value() < Rat(1));
        BigInt rd = r.value().denominator();
        while (rd % 2 == 0) rd /= 2;
        CHECK(rd == 1);
        auto v = padic_valuation(q - r.value(), 2);
        CHECK((!v || *v >= 0));
        // vanishing iff nonnegative valuation
        auto vq = padic_valuation(q, 2);
        CHECK(r.value().is_zero() == (!vq || *vq >= 0));
    }
}

TEST_CASE("character phases") {
    CHECK(character_phase(Rat(5, 2), Place::infinity()).value() == Rat(1, 2));
    CHECK(character_phase(Rat(3, 4), Place::finite(2)).value() == Rat(3, 4));
    CHECK(character_phase(Rat(7), Place::finite(5)).value() == Rat(0));
    CHECK(character_phase(Rat(7), Place::infinity()).value() == Rat(0));
    CHECK(character_phase(Rat(-13, 5), Place::infinity()).value() == Rat(2, 5));
}

TEST_CASE("character phase is additive mod 1 at every place") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> num(-500, 500);
    std::uniform_int_distribution<long long> den(1, 400);
    std::vector<Place> places{Place::infinity(), Place::finite(2), Place::finite(3), Place::finite(5)};
    for (int iter = 0; iter < 300; ++iter) {
        Rat x(num(rng), den(rng)), y(num(rng), den(rng));
        for (const Place& p : places) {
            Phase lhs = character_phase(x + y, p);
            Phase rhs = character_phase(x, p) + character_phase(y, p);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("S-integer membership") {
    PrimeSet s2({2});
    CHECK(is_s_integer(Rat(3, 8), s2));
    CHECK_FALSE(is_s_integer(Rat(1, 6), s2));
    CHECK(is_s_integer(Rat(5), PrimeSet{}));
    CHECK_THROWS_AS(SRational(Rat(1, 6), s2), std::invalid_argument);
}

TEST_CASE("diagonal annihilator defect") {
    PrimeSet s23({2, 3});
    // oracle: p-integrality of 5/6 - 1/2 and 5/6 - 1/3
    CHECK((padic_valuation(Rat(5, 6) - Rat(1, 2), 2).value() >= 0));
    CHECK((padic_valuation(Rat(5, 6) - Rat(1, 3), 3).value() >= 0));
    CHECK(fractional_part_p(Rat(5, 6), 2).value() == Rat(1, 2));
    CHECK(fractional_part_p(Rat(5, 6), 3).value() == Rat(1, 3));
    CHECK(diagonal_annihilator_defect(SRational(Rat(5, 6), s23)) == Rat(0));
    CHECK(diagonal_annihilator_defect(SRational(Rat(3, 4), PrimeSet({2}))) == Rat(0));
    CHECK(diagonal_annihilator_defect(SRational(Rat(7), s23)) == Rat(7));
}

TEST_CASE("annihilator defect is an integer on random S-rationals") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> num(-100000, 100000);
    std::uniform_int_distribution<int> expo(0, 6);
    for (const auto& primes : {std::vector<std::int64_t>{2}, {2, 3}, {2, 3, 5}}) {
        PrimeSet s(primes);
        for (int iter = 0; iter < 300; ++iter) {
            long long den = 1;
            for (std::int64_t p : primes) {
                int e = expo(rng);
                for (int i = 0; i < e; ++i) den *= p;
            }
            Rat q(num(rng), den);
            Rat defect = diagonal_annihilator_defect(q, s);
            CHECK(defect.is_integer());
        }
    }
}

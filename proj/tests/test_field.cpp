#include <doctest.h>

#include <random>

#include "ffc/field.hpp"
#include "ffc/rational.hpp"

using namespace ffc;

TEST_CASE("prime field arithmetic") {
    auto F5 = make_field(5, 1);
    Fe two = Fe::from_int(F5, 2), three = Fe::from_int(F5, 3);
    CHECK(two * three == Fe::one(F5));
    CHECK((two + three).is_zero());
    CHECK(two.inverse() == three);
    CHECK(Fe::from_int(F5, -1) == Fe::from_int(F5, 4));
    CHECK_THROWS_AS(Fe::zero(F5).inverse(), error);
}

TEST_CASE("F4 multiplication forced by the modulus") {
    // the unique monic irreducible quadratic over F_2 is t^2 + t + 1
    auto F4 = make_field(2, 2);
    REQUIRE(F4->modulus == std::vector<u32>{1, 1, 1});
    Fe t = Fe::gen_t(F4);
    CHECK(t * t == t + Fe::one(F4));
    CHECK(t.frobenius() == t + Fe::one(F4));
    CHECK(t * t * t == Fe::one(F4));
}

TEST_CASE("field mismatch is rejected") {
    auto F5 = make_field(5, 1);
    auto F7 = make_field(7, 1);
    CHECK_THROWS_AS(Fe::one(F5) + Fe::one(F7), error);
}

TEST_CASE("multiplicative group order and frobenius order") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : {std::pair<u32, u32>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}, {5, 2}}) {
        auto F = make_field(p, k);
        std::uniform_int_distribution<u64> pick(1, F->q - 1);
        for (int i = 0; i < 20; ++i) {
            Fe a = decode_element(F, pick(rng));
            CHECK(a.pow(F->q - 1).is_one());
            Fe b = a;
            for (u32 j = 0; j < k; ++j) b = b.frobenius();
            CHECK(b == a);
        }
    }
}

TEST_CASE("generator has full order and roots of unity are compatible") {
    auto F9 = make_field(3, 2);
    Fe g = field_generator(F9);
    CHECK(g.multiplicative_order() == 8);
    Fe z8 = root_of_unity(F9, 8), z4 = root_of_unity(F9, 4), z2 = root_of_unity(F9, 2);
    CHECK(z8 * z8 == z4);
    CHECK(z4 * z4 == z2);
    CHECK(z2 == -Fe::one(F9));
}

TEST_CASE("power residue symbol on F5") {
    auto F5 = make_field(5, 1);
    CHECK(power_residue_symbol(Fe::from_int(F5, 4), 2) == Fe::one(F5));
    CHECK(power_residue_symbol(Fe::from_int(F5, 2), 2) == Fe::from_int(F5, 4));
    CHECK(power_residue_symbol(Fe::from_int(F5, 1), 4) == Fe::one(F5));
    CHECK_THROWS_AS(power_residue_symbol(Fe::zero(F5), 2), error);
    CHECK_THROWS_AS(power_residue_symbol(Fe::one(F5), 3), error);
}

TEST_CASE("power residue symbol is multiplicative and detects powers") {
    std::mt19937_64 rng(11);
    for (auto [p, k, n] : {std::tuple<u32, u32, u64>{5, 1, 2}, {5, 1, 4}, {3, 2, 4},
                           {7, 1, 3}, {5, 2, 8}}) {
        auto F = make_field(p, k);
        std::uniform_int_distribution<u64> pick(1, F->q - 1);
        for (int i = 0; i < 25; ++i) {
            Fe a = decode_element(F, pick(rng)), b = decode_element(F, pick(rng));
            Fe chi_ab = power_residue_symbol(a * b, n);
            CHECK(chi_ab == power_residue_symbol(a, n) * power_residue_symbol(b, n));
            CHECK(power_residue_symbol(a.pow(n), n).is_one());
            CHECK(power_residue_symbol(a, n).pow(n).is_one());
        }
    }
}

TEST_CASE("trace to prime field") {
    auto F4 = make_field(2, 2);
    Fe t = Fe::gen_t(F4);
    // Tr(t) = t + t^2 = 1 in F_4
    CHECK(t.trace_to_prime() == 1);
    CHECK(Fe::one(F4).trace_to_prime() == 0); // 1 + 1 = 0 in char 2
}

TEST_CASE("element encoding round-trips") {
    auto F8 = make_field(2, 3);
    for (u64 c = 0; c < 8; ++c) CHECK(decode_element(F8, c).encode() == c);
}

TEST_CASE("rational numbers") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK((a - a).num() == 0);
    CHECK(a * b == Rational(1, 6));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(a / Rational(0), error);
}

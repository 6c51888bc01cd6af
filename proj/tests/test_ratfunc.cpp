#include <doctest.h>

#include "ffc/ratfunc.hpp"

using namespace ffc;

TEST_CASE("rational functions normalize to lowest terms with monic denominator") {
    auto F5 = make_field(5, 1);
    Poly x = Poly::x(F5), one = Poly::one(F5);
    RationalFunction g(x * x - one, (x - one) * Poly::constant(Fe::from_int(F5, 2)));
    // (x^2-1)/(2(x-1)) = (x+1)/2 = 3x + 3
    CHECK(g.den().is_one());
    CHECK(g.num() == Poly::from_ints(F5, {3, 3}));
    CHECK_THROWS_AS(RationalFunction(x, Poly::zero(F5)), error);
}

TEST_CASE("field operations") {
    auto F5 = make_field(5, 1);
    RationalFunction x = RationalFunction::x(F5);
    RationalFunction g = (x * x + RationalFunction(Poly::one(F5))) / x;
    CHECK(g * x == x * x + RationalFunction(Poly::one(F5)));
    CHECK((g - g).is_zero());
    CHECK(x.pow(-2) * x.pow(3) == x);
}

TEST_CASE("infinity chart transports the pole at infinity to (s)") {
    auto F5 = make_field(5, 1);
    RationalFunction x = RationalFunction::x(F5);
    RationalFunction f = x.pow(3) + x; // pole of order 3 at infinity
    RationalFunction chart = f.infinity_chart();
    // f(1/s) = (1 + s^2)/s^3
    CHECK(chart.num() == Poly::from_ints(F5, {1, 0, 1}));
    CHECK(chart.den() == Poly::from_ints(F5, {0, 0, 0, 1}));
}

TEST_CASE("artin schreier operator") {
    auto F5 = make_field(5, 1);
    RationalFunction x = RationalFunction::x(F5);
    CHECK(artin_schreier_op(x) == x.pow(5) - x);
}

#include <doctest.h>

#include "ffc/splitting.hpp"

using namespace ffc;

namespace {

RationalFunction X(const FieldPtr& F) { return RationalFunction::x(F); }

} // namespace

TEST_CASE("kummer(2, x) over F5 is geometric with G = Z/2") {
    auto F5 = make_field(5, 1);
    Cover c = make_cover(F5, {ComponentSpec::kummer(2, X(F5))});
    CHECK(c.group_size() == 2);
    CHECK(c.h == 1);
    CHECK(c.N.size() == 2);     // N = G
    CHECK(c.FbarN.size() == 2); // the whole group
    CHECK(c.geometric());
}

TEST_CASE("constant(3) over F5") {
    auto F5 = make_field(5, 1);
    Cover c = make_cover(F5, {ComponentSpec::constant(F5, 3)});
    CHECK(c.group_size() == 3);
    CHECK(c.h == 3);
    CHECK(c.N == std::vector<u64>{0});
    CHECK(c.FbarN == std::vector<u64>{1}); // only Fbar itself
}

TEST_CASE("kummer rejects perfect powers and wild exponents") {
    auto F5 = make_field(5, 1);
    RationalFunction x = X(F5);
    CHECK_THROWS_WITH_AS(make_cover(F5, {ComponentSpec::kummer(2, x * x)}),
                         doctest::Contains("NotGeometric"), error);
    CHECK_THROWS_WITH_AS(make_cover(F5, {ComponentSpec::kummer(3, x)}),
                         doctest::Contains("WildKummer"), error);
    // constant square: 4 = 2^2
    CHECK_THROWS_WITH_AS(
        make_cover(F5, {ComponentSpec::kummer(2, RationalFunction(Poly::from_ints(F5, {4})))}),
        doctest::Contains("NotGeometric"), error);
    // non-square constant is a legitimate constant-field disguise: h = 2
    Cover c = make_cover(F5, {ComponentSpec::kummer(2, RationalFunction(Poly::from_ints(F5, {2})))});
    CHECK(c.h == 2);
    CHECK(c.N.size() == 1);
}

TEST_CASE("kummer(4, 2x^2) over F5 has constant subfield of degree 2") {
    auto F5 = make_field(5, 1);
    RationalFunction f = RationalFunction(Poly::from_ints(F5, {0, 0, 2}));
    Cover c = make_cover(F5, {ComponentSpec::kummer(4, f)});
    CHECK(c.group_size() == 4);
    CHECK(c.h == 2);
    CHECK(c.N == std::vector<u64>{0, 2});
    CHECK(c.FbarN == std::vector<u64>{1, 3});
    CHECK(genus(c) == 0);
}

TEST_CASE("artin-schreier construction reduces and validates") {
    auto F5 = make_field(5, 1);
    RationalFunction x = X(F5);
    Cover c = make_cover(F5, {ComponentSpec::artin_schreier(x)});
    CHECK(c.group_size() == 5);
    CHECK(c.h == 1);
    CHECK(c.comps[0].f == x);

    // wp images collapse
    CHECK_THROWS_WITH_AS(make_cover(F5, {ComponentSpec::artin_schreier(artin_schreier_op(x))}),
                         doctest::Contains("NotReduced"), error);
    CHECK_THROWS_WITH_AS(
        make_cover(F5, {ComponentSpec::artin_schreier(RationalFunction::zero(F5))}),
        doctest::Contains("NotReduced"), error);

    // over F_9, x^3 reduces to x
    auto F9 = make_field(3, 2);
    Cover c9 = make_cover(F9, {ComponentSpec::artin_schreier(X(F9).pow(3))});
    CHECK(c9.comps[0].f == X(F9));

    // constant function with nonzero trace: a constant cover of degree p
    Cover cc = make_cover(F5, {ComponentSpec::artin_schreier(RationalFunction(Poly::one(F5)))});
    CHECK(cc.h == 5);
    CHECK(cc.N.size() == 1);
}

TEST_CASE("composite kummer x constant") {
    auto F5 = make_field(5, 1);
    Cover c = make_cover(F5, {ComponentSpec::kummer(2, X(F5)), ComponentSpec::constant(F5, 2)});
    CHECK(c.group_size() == 4);
    CHECK(c.h == 2);
    // N = kummer part x {0}: exponent vectors (a, 0) encode to {0, 1}
    CHECK(c.N == std::vector<u64>{0, 1});
    CHECK(c.FbarN == std::vector<u64>{2, 3});
    CHECK(genus(c) == 0);
}

TEST_CASE("hidden diagonal constants in a kummer pair are found") {
    auto F5 = make_field(5, 1);
    RationalFunction x = X(F5);
    RationalFunction f2 = RationalFunction(Poly::from_ints(F5, {0, 2})); // 2x
    Cover c = make_cover(F5, {ComponentSpec::kummer(2, x), ComponentSpec::kummer(2, f2)});
    CHECK(c.group_size() == 4);
    CHECK(c.h == 2); // sqrt(x)*sqrt(2x)/x = sqrt(2) generates F_25
    CHECK(c.N == std::vector<u64>{0, 3}); // diagonal (1,1) acts trivially on sqrt(2)
}

TEST_CASE("dependent components are rejected") {
    auto F5 = make_field(5, 1);
    RationalFunction x = X(F5);
    RationalFunction f4 = RationalFunction(Poly::from_ints(F5, {0, 4})); // 4x = (2)^2 x
    CHECK_THROWS_WITH_AS(
        make_cover(F5, {ComponentSpec::kummer(2, x), ComponentSpec::kummer(2, f4)}),
        doctest::Contains("NotDisjoint"), error);
    CHECK_THROWS_WITH_AS(
        make_cover(F5, {ComponentSpec::constant(F5, 2), ComponentSpec::constant(F5, 2)}),
        doctest::Contains("NotDisjoint"), error);
    // 2x is an F_p-multiple of x in K/wp(K): same Z/5 extension twice
    CHECK_THROWS_WITH_AS(
        make_cover(F5, {ComponentSpec::artin_schreier(x),
                        ComponentSpec::artin_schreier(x * RationalFunction(Poly::from_ints(F5, {2})))}),
        doctest::Contains("NotDisjoint"), error);
    // kummer(2,2) generates F_25, clashing with constant(2)
    CHECK_THROWS_WITH_AS(
        make_cover(F5, {ComponentSpec::kummer(2, RationalFunction(Poly::from_ints(F5, {2}))),
                        ComponentSpec::constant(F5, 2)}),
        doctest::Contains("NotDisjoint"), error);
    // independent geometric AS pair: x and x^2 (no combination is constant)
    Cover ok = make_cover(F5, {ComponentSpec::artin_schreier(x),
                               ComponentSpec::artin_schreier(x * x)});
    CHECK(ok.group_size() == 25);
    CHECK(ok.h == 1);
    // x and x+1 differ by the constant 1 with nonzero trace: independent,
    // and the pair hides the constant subfield F_{5^5}
    Cover diag = make_cover(F5, {ComponentSpec::artin_schreier(x),
                                 ComponentSpec::artin_schreier(x + RationalFunction(Poly::one(F5)))});
    CHECK(diag.group_size() == 25);
    CHECK(diag.h == 5);
    CHECK(diag.N.size() == 5);
}

TEST_CASE("constant x constant with coprime degrees") {
    auto F5 = make_field(5, 1);
    Cover c = make_cover(F5, {ComponentSpec::constant(F5, 2), ComponentSpec::constant(F5, 3)});
    CHECK(c.h == 6);
    CHECK(c.N.size() == 1);
    CHECK(c.FbarN.size() == 1);
    // Fbar = (1 mod 2, 1 mod 3)
    CHECK(c.G.decode(c.FbarN[0]) == std::vector<u32>{1, 1});
}

TEST_CASE("genus values") {
    auto F5 = make_field(5, 1);
    RationalFunction x = X(F5);
    CHECK(genus(make_cover(F5, {ComponentSpec::kummer(2, x)})) == 0);
    CHECK(genus(make_cover(F5, {ComponentSpec::kummer(2, x.pow(3) + x)})) == 1);
    CHECK(genus(make_cover(F5, {ComponentSpec::kummer(4, x)})) == 0);
    CHECK(genus(make_cover(F5, {ComponentSpec::artin_schreier(x)})) == 0);
    CHECK(genus(make_cover(F5, {ComponentSpec::artin_schreier(x.pow(3))})) == 4);
    CHECK(genus(make_cover(F5, {ComponentSpec::constant(F5, 3)})) == 0);
    CHECK(genus(make_cover(F5, {ComponentSpec::kummer(2, x), ComponentSpec::constant(F5, 2)})) ==
          0);
    CHECK_THROWS_WITH_AS(
        genus(make_cover(F5, {ComponentSpec::kummer(2, x), ComponentSpec::artin_schreier(x)})),
        doctest::Contains("UnsupportedGenus"), error);
    // genus 2: y^2 = x^5 + x over F_9 (ramified at five roots and infinity)
    auto F9 = make_field(3, 2);
    RationalFunction x9 = X(F9);
    CHECK(genus(make_cover(F9, {ComponentSpec::kummer(2, x9.pow(5) + x9)})) == 2);
}

TEST_CASE("genus sits inside the Hasse-Weil window of an independent place count") {
    // count places Q of M rational over the exact constant field k' = F_{q^h}
    // (deg_k Q = h) from splitting data, and compare against q^h + 1 within
    // 2 g q^{h/2}; squared comparison keeps it exact. This exercises the
    // genus, h and N computations together, including h > 1 covers.
    for (auto [p, k] : {std::pair<u32, u32>{5, 1}, {3, 2}}) {
        auto F = make_field(p, k);
        RationalFunction x = X(F);
        std::vector<Cover> suite;
        suite.push_back(make_cover(F, {ComponentSpec::kummer(2, x)}));
        suite.push_back(make_cover(F, {ComponentSpec::kummer(2, x.pow(3) + x)}));
        suite.push_back(make_cover(F, {ComponentSpec::kummer(4, x)}));
        suite.push_back(make_cover(F, {ComponentSpec::artin_schreier(x.pow(3))}));
        suite.push_back(make_cover(F, {ComponentSpec::constant(F, 2)}));
        // h = 2 cover: twist x^2 by a non-square constant (the generator)
        RationalFunction gx2 = x * x * RationalFunction(Poly::constant(field_generator(F)));
        suite.push_back(make_cover(F, {ComponentSpec::kummer(4, gx2)}));
        for (auto& c : suite) {
            u64 g;
            try {
                g = genus(c);
            } catch (const error&) { continue; }
            u64 h = c.h;
            long long count = 0;
            u64 qh = 1;
            for (u64 i = 0; i < h; ++i) qh *= F->q;
            for (auto& P : places_up_to_degree(F, u32(h))) {
                FrobeniusData d = splitting_data(c, P);
                if (d.deg_Q == h) count += (long long)d.num_places_above;
            }
            long long diff = count - (long long)(qh + 1);
            CAPTURE(c.h);
            CHECK(u64(diff * diff) <= 4 * g * g * qh);
        }
    }
}

TEST_CASE("frobenius index map is a surjective homomorphism") {
    auto F5 = make_field(5, 1);
    std::vector<Cover> covers;
    covers.push_back(
        make_cover(F5, {ComponentSpec::kummer(2, X(F5)), ComponentSpec::constant(F5, 2)}));
    covers.push_back(
        make_cover(F5, {ComponentSpec::kummer(4, RationalFunction(Poly::from_ints(F5, {0, 0, 2})))}));
    covers.push_back(
        make_cover(F5, {ComponentSpec::constant(F5, 2), ComponentSpec::constant(F5, 3)}));
    for (auto& c : covers) {
        for (u64 a = 0; a < c.group_size(); ++a)
            for (u64 b = 0; b < c.group_size(); ++b)
                CHECK(u64(c.frob_index[c.G.add(a, b)]) ==
                      (u64(c.frob_index[a]) + c.frob_index[b]) % c.h);
        std::vector<u64> counts(c.h, 0);
        for (u64 a = 0; a < c.group_size(); ++a) counts[c.frob_index[a]]++;
        for (u64 j = 0; j < c.h; ++j) CHECK(counts[j] == c.N.size());
    }
}

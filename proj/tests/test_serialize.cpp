#include <doctest.h>

#include "ffc/descriptor.hpp"

using namespace ffc;

TEST_CASE("field and element serialization round-trips") {
    auto F9 = make_field(3, 2);
    json j = field_to_json(F9);
    CHECK(j["p"] == 3);
    CHECK(j["k"] == 2);
    FieldPtr F9b = field_from_json(j);
    CHECK(F9b->same_as(*F9));

    Fe a = decode_element(F9, 5);
    CHECK(fe_from_json(F9, fe_to_json(a)) == a);

    auto F5 = make_field(5, 1);
    CHECK(fe_to_json(Fe::from_int(F5, 3)) == json(3)); // prime fields: plain ints
    CHECK(field_to_json(F5).contains("modulus") == false);
    CHECK_THROWS_AS(fe_from_json(F5, json::parse("[7]")), error);
}

TEST_CASE("polynomial and place serialization") {
    auto F5 = make_field(5, 1);
    Poly f = Poly::from_ints(F5, {1, 0, 2});
    CHECK(poly_to_json(f) == json::parse("[1,0,2]"));
    CHECK(poly_from_json(F5, poly_to_json(f)) == f);

    Place P = Place::finite(Poly::from_ints(F5, {3, 1}));
    json pj = place_to_json(P);
    CHECK(pj["type"] == "finite");
    CHECK(place_from_json(F5, pj) == P);
    json inf = place_to_json(Place::infinity(F5));
    CHECK(inf["type"] == "infinity");
    CHECK(place_from_json(F5, inf).is_infinity());
}

TEST_CASE("cover serialization round-trips through JSON") {
    auto F5 = make_field(5, 1);
    Cover c = make_cover(
        F5, {ComponentSpec::kummer(2, RationalFunction::x(F5)), ComponentSpec::constant(F5, 2)});
    json j = cover_to_json(c);
    CHECK(j["h"] == 2);
    CHECK(j["cover"]["kind"] == "composite");
    Cover c2 = make_cover(F5, components_from_json(F5, j["cover"]));
    CHECK(c2.group_size() == c.group_size());
    CHECK(c2.N == c.N);
}

TEST_CASE("frobenius data and report JSON") {
    auto F5 = make_field(5, 1);
    Cover c = make_cover(F5, {ComponentSpec::kummer(2, RationalFunction::x(F5))});
    FrobeniusData d = splitting_data(c, Place::finite(Poly::from_ints(F5, {3, 1})));
    json dj = frobenius_data_to_json(c, d);
    CHECK(dj["e"] == 1);
    CHECK(dj["f"] == 2);
    CHECK(dj["frobenius_coset"] == json::parse("[[1]]"));

    TheoremReport rep = verify_corollary(make_gamma_context(c, 1));
    json rj = report_to_json(rep);
    CHECK(rj["rows"].size() == 6);
    CHECK(rj["sum_measures"]["num"] == 3);
    CHECK(rj["genus"] == 0);
    std::string csv = report_csv_header() + "\n";
    report_to_csv(rep, csv);
    CHECK(csv.find("x+2,1,2,2,1,1,2,2,1") != std::string::npos);
}

TEST_CASE("abstract model JSON replay") {
    Group Q8 = group_by_name("Q8");
    AbstractModel m = random_abstract_model(Q8, 3);
    AbstractModel m2 = abstract_model_from_json(abstract_model_to_json(m));
    CHECK(m2.D == m.D);
    CHECK(m2.I == m.I);
    CHECK(m2.gamma0 == m.gamma0);
    for (u32 g = 0; g < Q8.size(); ++g)
        CHECK(measure(m2, g) == measure(m, g));
}

TEST_CASE("expression parser") {
    auto F5 = make_field(5, 1);
    RationalFunction x = RationalFunction::x(F5);
    CHECK(parse_function(F5, "x") == x);
    CHECK(parse_function(F5, "x^3+x") == x.pow(3) + x);
    CHECK(parse_function(F5, "2x^2") == x * x * RationalFunction(Poly::from_ints(F5, {2})));
    CHECK(parse_function(F5, "(x^2+1)/(x-1)") ==
          (x * x + RationalFunction(Poly::one(F5))) / (x - RationalFunction(Poly::one(F5))));
    CHECK(parse_function(F5, "1/x") == x.pow(-1));
    CHECK(parse_function(F5, " x * ( x + 3 ) ") == x * (x + RationalFunction(Poly::from_ints(F5, {3}))));
    CHECK_THROWS_AS(parse_function(F5, "x^"), error);
    CHECK_THROWS_AS(parse_function(F5, "y"), error);
    CHECK_THROWS_AS(parse_function(F5, "(x"), error);
}

TEST_CASE("cover descriptor parsing") {
    auto F5 = make_field(5, 1);
    auto c1 = parse_cover(F5, "kummer:2:x");
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].kind == CoverKind::kummer);
    CHECK(c1[0].n == 2);

    auto c2 = parse_cover(F5, "compose:[kummer:2:x,const:2]");
    REQUIRE(c2.size() == 2);
    CHECK(c2[1].kind == CoverKind::constant);

    auto c3 = parse_cover(F5, "as:x^3");
    CHECK(c3[0].kind == CoverKind::artin_schreier);

    auto c4 = parse_cover(F5, R"({"kind":"kummer","n":2,"f":{"num":[0,1],"den":[1]}})");
    CHECK(c4[0].n == 2);
    CHECK(c4[0].f == RationalFunction::x(F5));

    CHECK_THROWS_AS(parse_cover(F5, "frobenius:2:x"), error);
    CHECK_THROWS_AS(parse_cover(F5, "compose:[kummer:2:x"), error);
}

TEST_CASE("gamma selector") {
    auto F5 = make_field(5, 1);
    Cover c = make_cover(
        F5, {ComponentSpec::kummer(2, RationalFunction::x(F5)), ComponentSpec::constant(F5, 2)});
    CHECK(parse_gamma(c, "all") == c.FbarN);
    CHECK(parse_gamma(c, "1,1") == std::vector<u64>{c.G.encode({1, 1})});
    CHECK_THROWS_WITH_AS(parse_gamma(c, "0,0"), doctest::Contains("GammaNotInCoset"), error);
    CHECK_THROWS_AS(parse_gamma(c, "1"), error); // wrong arity
}

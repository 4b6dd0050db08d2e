#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ermc/io.hpp"

using namespace ermc;

TEST_CASE("field and extension specs") {
    const BaseField f5 = parse_field("5");
    CHECK(f5.p() == 5);
    CHECK(f5.m() == 1);
    const BaseField f9 = parse_field("3^2:1,0,1");
    CHECK(f9.q() == 9);
    CHECK_THROWS_AS(parse_field("4"), DomainError);
    CHECK_THROWS_AS(parse_field("3^2"), DomainError); // missing modulus

    // the worked example: gamma^4 = gamma^2 + gamma + 3 -> modulus 2,4,4,0,1
    const ExtField ext = parse_ext(f5, "4:2,4,4,0,1");
    CHECK(ext.n() == 4);
    const LElem g4 = ext.pow(ext.gen(), 4);
    LElem expect = ext.zero();
    expect[0] = f5.from_int(3);
    expect[1] = f5.one();
    expect[2] = f5.one();
    CHECK(g4 == expect);

    SUBCASE("bare degree picks a deterministic modulus") {
        const ExtField a = parse_ext(f5, "5");
        const ExtField b = parse_ext(f5, "5");
        CHECK(a == b);
    }
    SUBCASE("explicit frobenius exponent") {
        const ExtField e3 = parse_ext(f5, "4:2,4,4,0,1:3");
        CHECK(e3.frobenius_exponent() == 3);
        CHECK_THROWS_AS(parse_ext(f5, "4:2,4,4,0,1:2"), DomainError);
    }
}

TEST_CASE("basis specs") {
    const BaseField f5 = parse_field("5");
    const ExtField ext = parse_ext(f5, "4:2,4,4,0,1");
    CHECK(parse_basis(ext, "power").elements() == power_basis(ext).elements());
    const LBasis b = parse_basis(ext, "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1");
    CHECK(b.elements() == power_basis(ext).elements());
    CHECK_THROWS_AS(parse_basis(ext, "1,0,0,0;1,0,0,0;0,0,1,0;0,0,0,1"), SingularBasisError);
}

TEST_CASE("polynomial text round trip") {
    const BaseField f5 = parse_field("5");
    const FPoly p = parse_poly(f5, 4, 3, "1*x1^3+4*x1*x3*x4+2*x2^3");
    CHECK(p.terms.size() == 3);
    CHECK(p.terms.at(Exponents{3, 0, 0, 0}) == f5.one());
    CHECK(p.terms.at(Exponents{1, 0, 1, 1}) == f5.from_int(4));
    const FPoly back = parse_poly(f5, 4, 3, poly_to_string(p));
    CHECK(back == p);
    SUBCASE("negative coefficients reduce into the field") {
        const FPoly q = parse_poly(f5, 2, 2, "-1*x1^2+-3*x1*x2");
        CHECK(q.terms.at(Exponents{2, 0}) == f5.from_int(4));
        CHECK(q.terms.at(Exponents{1, 1}) == f5.from_int(2));
    }
    SUBCASE("bare variables have exponent one") {
        const FPoly q = parse_poly(f5, 2, 2, "2*x1*x2");
        CHECK(q.terms.count(Exponents{1, 1}) == 1);
    }
    SUBCASE("coordinate-list coefficients for non-prime base fields") {
        const BaseField f9 = parse_field("3^2:1,0,1");
        const FPoly q = parse_poly(f9, 2, 2, "[1,2]*x1^2+2*x2^2");
        CHECK(q.terms.at(Exponents{2, 0}) == f9.from_index(1 + 2 * 3));
        CHECK(q.terms.at(Exponents{0, 2}) == f9.from_int(2));
        CHECK_THROWS_AS(parse_poly(f9, 2, 2, "[1]*x1^2"), DomainError);
    }
    SUBCASE("zero polynomial") {
        CHECK(parse_poly(f5, 2, 2, "0").terms.empty());
        CHECK(poly_to_string(zero_poly<Fq>(2, 2)) == "0");
    }
    SUBCASE("degree mismatches are rejected") {
        CHECK_THROWS_AS(parse_poly(f5, 2, 3, "1*x1^2"), DomainError);
        CHECK_THROWS_AS(parse_poly(f5, 2, 2, "1*x3^2"), DomainError);
    }
}

TEST_CASE("polynomial json round trip") {
    const BaseField f7 = parse_field("7");
    const FPoly p = parse_poly(f7, 3, 3, "3*x1^3+5*x1^2*x3+2*x2*x3^2");
    const nlohmann::json j = poly_to_json(p);
    CHECK(j["n"] == 3);
    CHECK(j["d"] == 3);
    CHECK(poly_from_json(f7, j) == p);
}

TEST_CASE("matrix serialization") {
    const BaseField f5 = parse_field("5");
    Mat<Fq> m(2, 3, f5.zero());
    m.at(0, 0) = f5.one();
    m.at(1, 2) = f5.from_int(4);
    CHECK(matrix_to_csv(m) == "1,0,0\n0,0,4\n");
    const nlohmann::json j = matrix_to_json(m);
    CHECK(j[0][0] == 1);
    CHECK(j[1][2] == 4);
}

TEST_CASE("message parsing") {
    const BaseField f5 = parse_field("5");
    const auto msg = parse_message(f5, "1,0,4,-1");
    REQUIRE(msg.size() == 4);
    CHECK(msg[0] == f5.one());
    CHECK(msg[3] == f5.from_int(4));
    CHECK_THROWS_AS(parse_message(f5, "1,,2"), DomainError);
}

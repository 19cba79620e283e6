#include <gtest/gtest.h>

#include "support.hpp"

using namespace iwahori;

TEST(Io, ParseBasics) {
    EXPECT_EQ(parse_element("q*chi(1,0,0)"), iota());
    EXPECT_EQ(parse_element("iota"), iota());
    EXPECT_EQ(parse_element("phi0 + (s - 1/s)*phi1"), phi(0) + (Coeff::s() - Coeff::s_pow(-1)) * phi(1));
    EXPECT_EQ(parse_element("chi(1,1,0)*chi(1,-1,0)"), mul_basis({1, 1, 0}, {1, -1, 0}));
    EXPECT_EQ(parse_element("chi(2,0,0)/s"), Coeff::s_pow(-1) * chi(2, 0, 0));
}

TEST(Io, ParseProductOfRays) {
    const HeckeElement t = theta(0, -1);
    const HeckeElement z = parse_element("theta(0,-1)*theta(0,-1)");
    EXPECT_EQ(z, t * t);
    EXPECT_EQ(z.levels(), (std::set<Index>{-2}));
    for (int a = 1; a <= 2; ++a)
        for (Index m = -3; m <= 6; ++m) EXPECT_EQ(z.coefficient_at(a, m, -2), coeff_of_product(t, t, {a, m, -2}));
}

TEST(Io, ProductsAssociateLeft) {
    EXPECT_EQ(parse_element("chi(2,-2,1)*phi0*chi(1,2,2)"), (chi(2, -2, 1) * phi(0)) * chi(1, 2, 2));
}

TEST(Io, ParseSums) {
    EXPECT_EQ(parse_element("sum(m=0..inf, -(q-1)*q^m*chi(2,m,-1))"), theta(0, -1) - chi(1, 0, -1));
    EXPECT_EQ(parse_element("sum(m=-inf..0, (1-m)*s^(-2*m)*chi(1,m,2))"),
              HeckeElement::from_raw({{{1, 2}, {{std::nullopt, 0, {{-2, Poly(1) - Poly::var()}}}}}}));
    EXPECT_EQ(parse_element("sum(m=1..3, chi(1,m,0))"), chi(1, 1, 0) + chi(1, 2, 0) + chi(1, 3, 0));
}

TEST(Io, ParseErrors) {
    try {
        parse_element("chi(3,0,0)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("sheet must be 1 or 2"), std::string::npos);
    }
    EXPECT_THROW(parse_element("chi(1,0)"), ParseError);
    EXPECT_THROW(parse_element("frob"), ParseError);
    EXPECT_THROW(parse_element("q + chi(1,0,0)"), ParseError);
    EXPECT_THROW(parse_element("chi(1,0,0)/chi(1,0,0)"), ParseError);
    EXPECT_THROW(parse_element("chi(1,0,0)/(q-q)"), Error);
    EXPECT_EQ(parse_element("chi(1,0,0)/(q-1)"), (Coeff(1) / (Coeff::q() - Coeff(1))) * chi(1, 0, 0));
    EXPECT_THROW(parse_element("sum(m=-inf..inf, chi(1,m,1))"), ParseError);
    EXPECT_THROW(parse_element("chi(1,0,0) chi(1,0,0)"), ParseError);
}

TEST(Io, TextFormat) {
    EXPECT_EQ(format_text(HeckeElement()), "0");
    EXPECT_EQ(format_text(chi(1, 2, -1)), "(1)*chi(1,2,-1)");
    EXPECT_NE(format_text(theta(0, -1)).find("sum(m=0..+inf"), std::string::npos);
}

TEST(Io, Latex) {
    EXPECT_NE(format_latex(theta(0, -1)).find("\\sum_{m>=0}"), std::string::npos);
    EXPECT_NE(format_latex(geometric_row(1, 1, std::nullopt, 2, Coeff(1), 0)).find("\\sum_{m<=2}"), std::string::npos);
}

TEST(Io, JsonSchema) {
    const auto doc = to_json(theta(0, -1));
    ASSERT_TRUE(doc.contains("rows"));
    bool saw_inf = false;
    for (const auto& row : doc["rows"])
        for (const auto& s : row["strips"]) saw_inf = saw_inf || s["hi"] == "+inf";
    EXPECT_TRUE(saw_inf);
    EXPECT_THROW(from_json(nlohmann::json::parse(R"({"rows":[{"a":3,"j":0,"strips":[]}]})")), Error);
}

TEST(IoProperty, RoundTrips) {
    std::mt19937_64 rng(29);
    std::vector<HeckeElement> xs{theta(0, -1) * theta(0, -1), phi(2) * phi(2), theta(-1, 0),
                                 geometric_row(2, 1, std::nullopt, 0, Coeff(1), -2) * chi(1, 0, 1)};
    for (int n = 0; n < 100; ++n) xs.push_back(gen::random_element(rng, 2));
    for (const auto& x : xs) {
        EXPECT_EQ(parse_element(format_text(x)), x) << format_text(x);
        EXPECT_EQ(from_json(nlohmann::json::parse(to_json(x).dump())), x) << format_text(x);
    }
}

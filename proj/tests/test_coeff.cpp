#include <gtest/gtest.h>

#include "support.hpp"

using namespace iwahori;

TEST(Coeff, ClearsDenominator) {
    const Coeff a = parse_coeff("(s^2-1)/s^2");
    EXPECT_EQ(a, Coeff(1) - Coeff::q_pow(-1));
    EXPECT_EQ(a * Coeff::q(), parse_coeff("s^2-1"));
    EXPECT_TRUE((a * Coeff::q()).denominator().is_one());
}

TEST(Coeff, CancelsCommonFactor) {
    const Coeff q = Coeff::q();
    const Coeff r = (q - Coeff(1)) / (q * q - Coeff(1));
    EXPECT_EQ(r, Coeff(1) / (q + Coeff(1)));
    EXPECT_EQ(r.numerator().str('s'), "1");
    EXPECT_EQ(r.denominator().str('s'), "s^2 + 1");
}

TEST(Coeff, SquareRootConvention) {
    EXPECT_EQ(Coeff::s() * Coeff::s(), Coeff::q());
    EXPECT_EQ(Coeff::q_pow(-2), Coeff::s_pow(-4));
}

TEST(Coeff, Evaluation) {
    EXPECT_EQ((Coeff(1) - Coeff::q_pow(-1)).eval_at_q(2), Rational(1, 2));
    const Index i = 1, k = -1;
    EXPECT_EQ(Coeff::q_pow(std::min(2 * i - 1, -2 * k - 1)).eval_at_q(3), Rational(3));
    EXPECT_EQ(Coeff::s().eval_at_q(4), Rational(2));
    EXPECT_THROW(Coeff::s().eval_at_q(2), UnsupportedParameters);
    EXPECT_THROW((Coeff(1) / (Coeff::q() - Coeff(4))).eval_at_q(4), PoleError);
}

TEST(Coeff, DivisionByZero) {
    EXPECT_THROW(Coeff(1) / Coeff(), DivisionByZero);
    EXPECT_THROW(Coeff().pow(-1), DivisionByZero);
}

TEST(Coeff, NormalFormIsUnique) {
    // leading denominator coefficient positive, content 1
    const Coeff a = Coeff::fraction(IntPoly({BigInt(-2), BigInt(0), BigInt(2)}), IntPoly({BigInt(0), BigInt(-4)}));
    EXPECT_EQ(a.denominator().str('s'), "2*s");
    EXPECT_EQ(a, (Coeff::q() - Coeff(1)) / (Coeff(-2) * Coeff::s()));
}

TEST(Coeff, ParseErrors) {
    EXPECT_THROW(parse_coeff("s^"), ParseError);
    EXPECT_THROW(parse_coeff("(q+1"), ParseError);
    EXPECT_THROW(parse_coeff("x"), ParseError);
    EXPECT_THROW(parse_coeff("1/(q-q)"), ParseError);
}

TEST(Coeff, PrintParseRoundTrip) {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 200; ++n) {
        const Coeff c = gen::random_coeff(rng);
        EXPECT_EQ(parse_coeff(c.str()), c) << c.str();
    }
}

TEST(CoeffProperty, FieldAxioms) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 300; ++n) {
        const Coeff a = gen::random_coeff(rng), b = gen::random_coeff(rng), c = gen::random_coeff(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + Coeff(), a);
        EXPECT_EQ(a * Coeff(1), a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) EXPECT_TRUE((a / a).is_one());
        EXPECT_EQ(std::hash<Coeff>{}(a * b), std::hash<Coeff>{}(b * a));
    }
}

TEST(CoeffProperty, EvaluationIsHomomorphism) {
    std::mt19937_64 rng(13);
    for (int n = 0; n < 200; ++n) {
        const Coeff a = gen::random_coeff(rng), b = gen::random_coeff(rng);
        const Rational s0(3, 2);
        try {
            EXPECT_EQ((a * b).eval_at_s(s0), a.eval_at_s(s0) * b.eval_at_s(s0));
            EXPECT_EQ((a + b).eval_at_s(s0), a.eval_at_s(s0) + b.eval_at_s(s0));
        } catch (const PoleError&) {
        }
    }
}

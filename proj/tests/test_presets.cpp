#include <gtest/gtest.h>

#include "support.hpp"

using namespace iwahori;

namespace {
const Coeff q = Coeff::q(), one(1);
}

TEST(Presets, ThetaMinusOne) {
    const HeckeElement want = chi(1, -1, 0) - (q - one) * chi(2, -1, 0) - (q - one) * chi(2, 0, 0) +
                              q * (q + Coeff::q_pow(-1) - Coeff(2)) * chi(1, 0, 0);
    EXPECT_EQ(preset("theta(-1,0)"), want);
    EXPECT_EQ(preset("theta(1,0)"), chi(1, 1, 0));
    EXPECT_EQ(preset("theta(0,1)"), chi(1, 0, 1));
}

TEST(Presets, Named) {
    EXPECT_EQ(preset("phi2"), Coeff::s() * chi(2, 0, -1));
    EXPECT_EQ(preset("iota"), q * chi(1, 0, 0));
    EXPECT_EQ(preset("chi(2,-3,1)"), chi(2, -3, 1));
    EXPECT_THROW(preset("phi3"), UnknownName);
    EXPECT_THROW(preset("theta(1,1)"), UnknownName);
}

TEST(Presets, ThetaMonomials) {
    EXPECT_EQ(theta_monomial(1, 1), Coeff::q_pow(-1) * chi(1, 1, 1));
    EXPECT_EQ(theta_monomial(0, 0), iota());
    EXPECT_EQ(theta_monomial(2, 0), power(theta(1, 0), 2));
}

TEST(Presets, ThetaMonomialNegativeIndex) {
    // expand Theta_{-1,0} * chi1_{0,1} termwise by direct summation
    const HeckeElement got = theta_monomial(-1, 1);
    EXPECT_EQ(got, q * chi(1, -1, 1));
    const HeckeElement t = theta(-1, 0), y = chi(1, 0, 1);
    for (int a = 1; a <= 2; ++a)
        for (Index m = -4; m <= 3; ++m)
            EXPECT_EQ(coeff_of_product(t, y, {a, m, 1}), (a == 1 && m == -1) ? q : Coeff()) << a << " " << m;
}

TEST(Presets, PowerConventions) {
    EXPECT_EQ(power(phi(0), 0), iota());
    EXPECT_EQ(power(phi(0), 1), phi(0));
    EXPECT_EQ(power(theta(0, -1), 2), theta(0, -1) * theta(0, -1));
}

TEST(Weyl, GeneratorsAreInvolutions) {
    for (const char* g : {"s0", "s1", "s2"}) EXPECT_EQ(weyl_word({g, g}), WeylElement{}) << g;
}

TEST(Weyl, CoxeterWord) {
    EXPECT_EQ(weyl_word({"s0", "s1", "s2", "s0", "s1", "s2"}), WeylElement{});
    EXPECT_NE(weyl_word({"s0", "s1", "s2"}), WeylElement{});
}

TEST(Weyl, MonomialMatrixProduct) {
    // [[0,t^a],[-t^-a,0]] * [[0,1],[-1,0]] = diag(-t^a, -t^-a) ~ diag(t^a, t^-a)
    EXPECT_EQ(weyl_mul({true, 1, 1}, {true, 0, 0}), (WeylElement{false, 1, 1}));
    EXPECT_EQ(weyl_mul({false, 2, -1}, {false, -1, 3}), (WeylElement{false, 1, 2}));
    EXPECT_EQ(WeylElement::from_label({2, 3, -1}).label(), (BasisIndex{2, 3, -1}));
    EXPECT_THROW(weyl_generator("s3"), UnknownName);
}

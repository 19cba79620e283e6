#include <gtest/gtest.h>

#include "support.hpp"

using namespace iwahori;

namespace {

HeckeElement random_level(std::mt19937_64& rng, Index level) {
    std::uniform_int_distribution<Index> idx(-2, 2);
    std::uniform_int_distribution<int> sheet(1, 2), coef(-3, 3), terms(1, 3);
    HeckeElement x;
    for (int t = terms(rng); t-- > 0;) x += Coeff(coef(rng)) * chi(sheet(rng), idx(rng), level);
    return x;
}

} // namespace

TEST(Property, LevelZeroIsAssociative) {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 60; ++n) {
        const HeckeElement x = random_level(rng, 0), y = random_level(rng, 0), z = random_level(rng, 0);
        EXPECT_EQ((x * y) * z, x * (y * z)) << format_text(x) << " | " << format_text(y) << " | " << format_text(z);
    }
}

TEST(Property, CentralElementCommutesWithLevelZero) {
    std::mt19937_64 rng(37);
    const HeckeElement c = theta(1, 0) + theta(-1, 0);
    for (int n = 0; n < 40; ++n) {
        const HeckeElement x = random_level(rng, 0);
        EXPECT_EQ(c * x, x * c) << format_text(x);
    }
}

TEST(Property, ScalarsPullThrough) {
    std::mt19937_64 rng(41);
    for (int n = 0; n < 60; ++n) {
        const HeckeElement x = gen::random_element(rng, 2), y = gen::random_element(rng, 2);
        const Coeff a = gen::random_coeff(rng);
        EXPECT_EQ((a * x) * y, a * (x * y));
        EXPECT_EQ(x * (a * y), a * (x * y));
    }
}

TEST(Property, Distributive) {
    std::mt19937_64 rng(43);
    for (int n = 0; n < 60; ++n) {
        const HeckeElement x = gen::random_element(rng, 2), y = gen::random_element(rng, 2),
                           z = gen::random_element(rng, 2);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x + y) * z, x * z + y * z);
    }
}

TEST(Property, VanishingRule) {
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (Index i = -2; i <= 2; ++i)
                for (Index k = -2; k <= 2; ++k)
                    for (Index j : {-2, -1, 1, 2})
                        for (Index l : {-2, -1, 1, 2})
                            if (j * l < 0) EXPECT_TRUE(mul_basis({a, i, j}, {b, k, l}).is_zero());
}

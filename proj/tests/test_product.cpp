#include <gtest/gtest.h>

#include "support.hpp"

using namespace iwahori;

namespace {
const Coeff q = Coeff::q(), one(1), s = Coeff::s();
const Coeff c1 = one - Coeff::q_pow(-1); // 1 - q^-1
} // namespace

TEST(Product, SameSheetPositive) {
    EXPECT_EQ(mul_basis({1, 1, 0}, {1, 1, 0}), Coeff::q_pow(-1) * chi(1, 2, 0));
    EXPECT_EQ(table_family({1, 1, 0}, {1, 1, 0}), "1a");
}

TEST(Product, MinExponentCase) {
    const HeckeElement want = q * chi(1, 0, 0) + (q - one) * chi(2, 0, 0) + c1 * chi(2, 1, 0);
    EXPECT_EQ(mul_basis({1, 1, 0}, {1, -1, 0}), want);
    EXPECT_EQ(table_family({1, 1, 0}, {1, -1, 0}), "1e");
}

TEST(Product, RaySum) {
    EXPECT_EQ(mul_basis({2, 0, 1}, {1, 0, 1}), geometric_row(1, 2, std::nullopt, 0, c1, -2));
    EXPECT_EQ(table_family({2, 0, 1}, {1, 0, 1}), "2a");
}

TEST(Product, OppositeLevelsVanish) {
    EXPECT_TRUE(mul_basis({1, 0, 1}, {1, 0, -1}).is_zero());
    EXPECT_EQ(table_family({1, 0, 1}, {1, 0, -1}), "vanish");
    EXPECT_TRUE(mul_basis({2, 3, -2}, {2, -1, 1}).is_zero());
}

TEST(Product, SheetTwoSquare) {
    EXPECT_EQ(mul_basis({2, 0, 0}, {2, 0, 0}), chi(1, 0, 0) + c1 * chi(2, 0, 0));
    EXPECT_EQ(table_family({2, 0, 0}, {2, 0, 0}), "2i");
}

TEST(Product, FamiliesAreExhaustive) {
    std::set<std::string> seen;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (Index i = -2; i <= 2; ++i)
                for (Index j = -1; j <= 1; ++j)
                    for (Index k = -2; k <= 2; ++k)
                        for (Index l = -1; l <= 1; ++l) seen.insert(table_family({a, i, j}, {b, k, l}));
    for (const auto& f : table_families()) EXPECT_TRUE(seen.count(f)) << f;
    EXPECT_TRUE(seen.count("vanish"));
}

TEST(Product, SheetTwoLevelZeroTimesSheetOneVanishes) {
    for (Index i = -2; i <= 2; ++i)
        for (Index k = -2; k <= 2; ++k) {
            EXPECT_TRUE(mul_basis({2, i, 0}, {1, k, -1}).is_zero() == (i >= 0)) << i << " " << k;
            EXPECT_TRUE(mul_basis({2, i, 0}, {1, k, 1}).is_zero() == (i < 0)) << i << " " << k;
        }
}

TEST(Product, ThetaInverse) { EXPECT_EQ(theta(1, 0) * theta(-1, 0), iota()); }

TEST(Product, RayTimesBasisBruteSum) {
    const HeckeElement x = geometric_row(2, 1, std::nullopt, 0, one, -2); // sum_{m<=0} q^-m chi2_{m,1}
    const HeckeElement z = x * chi(1, 0, 1);
    // independent: chi2_{m,1} * chi1_{0,1} = (1-q^-1) sum_{p<=m} q^{m-p} chi1_{p,2}
    for (Index n = -8; n <= 2; ++n) {
        Coeff brute;
        for (Index m = n; m <= 0; ++m) brute += Coeff::q_pow(-m) * c1 * Coeff::q_pow(m - n);
        EXPECT_EQ(z.coefficient_at(1, n, 2), brute) << n;
        if (n <= 0) EXPECT_EQ(brute, c1 * Coeff::q_pow(-n) * Coeff(1 - n));
    }
    EXPECT_EQ(z.levels(), (std::set<Index>{2}));
    EXPECT_EQ(z.rows().size(), 1u);
}

TEST(Product, QuadraticRelation) {
    EXPECT_EQ(phi(0) * phi(0), (s - s.pow(-1)) * phi(0) + iota());
}

TEST(Product, IdentityOnRay) {
    EXPECT_EQ(iota() * theta(0, -1), theta(0, -1));
    EXPECT_EQ(theta(0, -1) * iota(), theta(0, -1));
}

TEST(Product, CoeffOfProductAgrees) {
    const HeckeElement t = theta(0, -1);
    const Coeff direct = coeff_of_product(t, t, {2, 5, -2});
    EXPECT_EQ(direct, (t * t).coefficient_at(2, 5, -2));
    EXPECT_EQ(direct, parse_coeff("15*s^12 - 46*s^10 + 46*s^8 - 15*s^6"));
    EXPECT_EQ(coeff_of_product(phi(2), phi(2), {2, 1, -2}), (s - s.pow(-1)) * s);
    EXPECT_EQ(coeff_of_product(iota(), iota(), {1, 0, 0}), q);
}

TEST(Product, WrongSideRaysThrow) {
    // a positive-level ray needs a right factor bounded above; constructing one
    // unbounded below is already rejected, so check convolution directly
    const std::vector<Strip> up{{0, std::nullopt, {{0, Poly(one)}}}}, down{{std::nullopt, 0, {{0, Poly(one)}}}};
    EXPECT_THROW(convolve(up, down), InfiniteContribution);
}

TEST(Product, BilinearOverTerms) {
    const HeckeElement x = chi(1, 1, 0) + Coeff(2) * chi(2, -1, 0), y = chi(2, 0, 0) - chi(1, 2, 0);
    EXPECT_EQ(x * y, mul_basis({1, 1, 0}, {2, 0, 0}) - mul_basis({1, 1, 0}, {1, 2, 0}) +
                         Coeff(2) * mul_basis({2, -1, 0}, {2, 0, 0}) - Coeff(2) * mul_basis({2, -1, 0}, {1, 2, 0}));
}

TEST(ProductProperty, Grading) {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 120; ++n) {
        const HeckeElement x = gen::random_element(rng, 2), y = gen::random_element(rng, 2);
        const HeckeElement z = x * y;
        std::set<Index> allowed;
        for (Index j : x.levels())
            for (Index l : y.levels())
                if (j * l >= 0) allowed.insert(j + l);
        for (Index L : z.levels()) EXPECT_TRUE(allowed.count(L)) << format_text(x) << " * " << format_text(y);
        for (Index L : allowed) {
            HeckeElement part;
            for (Index j : x.levels())
                for (Index l : y.levels())
                    if (j + l == L && j * l >= 0) part += x.level_projection(j) * y.level_projection(l);
            EXPECT_EQ(z.level_projection(L), part);
        }
    }
}

TEST(ProductProperty, Identity) {
    std::mt19937_64 rng(19);
    for (int n = 0; n < 120; ++n) {
        const HeckeElement x = gen::random_element(rng, 2);
        EXPECT_EQ(iota() * x, x) << format_text(x);
        EXPECT_EQ(x * iota(), x) << format_text(x);
    }
}

TEST(ProductProperty, TwoPaths) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Index> idx(-5, 5);
    std::uniform_int_distribution<int> sh(1, 2);
    for (int n = 0; n < 80; ++n) {
        const HeckeElement x = gen::random_element(rng, 1), y = gen::random_element(rng, 1);
        const HeckeElement z = x * y;
        for (Index L : z.levels())
            for (int t = 0; t < 4; ++t) {
                const BasisIndex target{sh(rng), idx(rng), L};
                EXPECT_EQ(coeff_of_product(x, y, target), z.coefficient_at(target.sheet, target.i, L));
            }
    }
}

TEST(Product, NegativeControlDiffers) {
    const ProductEngine bad(TableOptions{1});
    EXPECT_NE(bad.mul_basis({1, 1, 0}, {1, -1, 0}), mul_basis({1, 1, 0}, {1, -1, 0}));
    EXPECT_EQ(bad.mul_basis({1, 1, 0}, {1, 1, 0}), mul_basis({1, 1, 0}, {1, 1, 0}));
}

#include <gtest/gtest.h>

#include "support.hpp"

using namespace iwahori;

namespace {
FieldElem2 t(long p, Index e1, Index e2) { return FieldElem2::monomial(p, 1, e1, e2); }
} // namespace

TEST(Oracle, Valuation) {
    EXPECT_EQ(t(3, 1, -1).valuation(), (Rank2Valuation{false, 1, -1}));
    EXPECT_EQ((t(3, -3, 0) + t(3, 0, 1)).valuation(), (Rank2Valuation{false, -3, 0}));
    EXPECT_EQ(FieldElem2(3).valuation(), Rank2Valuation::inf());
    EXPECT_LT((Rank2Valuation{false, 5, -1}), (Rank2Valuation{false, -5, 0}));
    EXPECT_TRUE(in_O(t(2, -7, 1)));
    EXPECT_FALSE(in_O(t(2, 7, -1)));
}

TEST(Oracle, ArithmeticModP) {
    const FieldElem2 x = FieldElem2::constant(3, 2) + t(3, 1, 0);
    EXPECT_TRUE((x + x + x).is_zero());
    EXPECT_EQ((x * x).coeff(0, 0), 1);
    EXPECT_EQ((x * x).coeff(1, 0), 1);
    EXPECT_THROW(check_prime(4), UnsupportedParameters);
    EXPECT_THROW(check_prime(19), UnsupportedParameters);
}

TEST(Oracle, ClassifyRepresentatives) {
    const long p = 3;
    const FieldElem2 zero(p);
    EXPECT_EQ(classify({t(p, 1, 1), zero, zero, t(p, -1, -1)}), (BasisIndex{1, 1, 1}));
    EXPECT_EQ(classify({zero, t(p, 0, 1), -t(p, 0, -1), zero}), (BasisIndex{2, 0, 1}));
    EXPECT_EQ(classify(parse_matrix("[[1,1],[t1,1+t1]]", 2)), (BasisIndex{1, 0, 0}));
    for (int a = 1; a <= 2; ++a)
        for (Index i = -2; i <= 2; ++i)
            for (Index j = -2; j <= 2; ++j) EXPECT_EQ(classify(representative({a, i, j}, p)), (BasisIndex{a, i, j}));
}

TEST(Oracle, ClassifyRejectsBadDeterminant) {
    EXPECT_THROW(classify(parse_matrix("[[t1,0],[0,1]]", 2)), DeterminantError);
}

TEST(Oracle, MatrixParser) {
    const auto m = parse_matrix("[[t1^-1*t2, 2], [0, t1*t2^-1]]", 5);
    EXPECT_EQ(m.a.valuation(), (Rank2Valuation{false, -1, 1}));
    EXPECT_EQ(m.b.coeff(0, 0), 2);
    EXPECT_THROW(parse_matrix("[[1,1],[0]]", 2), ParseError);
    EXPECT_THROW(parse_matrix("[[1,x],[0,1]]", 2), ParseError);
}

TEST(Oracle, RepresentativeCounts) {
    EXPECT_EQ(enumerate_reps(1, 0, 2).size(), 1u);
    EXPECT_EQ(enumerate_reps(1, 1, 2).size(), 4u);
    EXPECT_EQ(enumerate_reps(2, 0, 3).size(), 3u);
    EXPECT_THROW(enumerate_reps(1, 5, 2), UnsupportedParameters);
}

TEST(Oracle, RepresentativesArePairwiseInequivalent) {
    // z, z' in the same right coset iff z' z^-1 in I
    const long p = 2;
    for (int a = 1; a <= 2; ++a)
        for (Index i = -2; i <= 2; ++i) {
            const auto reps = enumerate_reps(a, i, p);
            for (std::size_t u = 0; u < reps.size(); ++u) {
                EXPECT_EQ(classify(reps[u]), (BasisIndex{a, i, 0}));
                for (std::size_t v = u + 1; v < reps.size(); ++v)
                    EXPECT_FALSE(in_iwahori(reps[v] * reps[u].adjugate())) << a << " " << i;
            }
        }
}

TEST(Oracle, ProductCounts) {
    using M = std::map<BasisIndex, Rational>;
    EXPECT_EQ(product_counts({2, 0, 0}, {2, 0, 0}, 2), (M{{{1, 0, 0}, Rational(1)}, {{2, 0, 0}, Rational(1, 2)}}));
    EXPECT_EQ(product_counts({1, 1, 0}, {1, 1, 0}, 2), (M{{{1, 2, 0}, Rational(1, 2)}}));
    EXPECT_EQ(product_counts({1, 0, 0}, {1, 0, 0}, 3), (M{{{1, 0, 0}, Rational(1, 3)}}));
    EXPECT_THROW(product_counts({1, 0, 1}, {1, 0, 0}, 2), UnsupportedParameters);
}

TEST(Oracle, CountsMatchTableAtLevelZero) {
    for (long p : {2L, 3L})
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (Index i = -1; i <= 1; ++i)
                    for (Index k = -1; k <= 1; ++k)
                        EXPECT_EQ(product_counts({a, i, 0}, {b, k, 0}, p), evaluate_at(mul_basis({a, i, 0}, {b, k, 0}), p))
                            << a << i << b << k << " q=" << p;
}

TEST(Oracle, SandwichesPreserveLabel) {
    for (long p : {2L, 3L}) {
        IwahoriSampler g(p, 99), h(p, 100);
        for (int n = 0; n < 40; ++n) {
            const auto x = g.next(), y = h.next();
            ASSERT_TRUE(in_iwahori(x));
            const BasisIndex label{1 + n % 2, n % 5 - 2, n % 3 - 1};
            EXPECT_EQ(classify(x * representative(label, p) * y), label);
        }
    }
}

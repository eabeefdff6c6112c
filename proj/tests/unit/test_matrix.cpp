#include <gtest/gtest.h>

#include <random>

#include "pw/matrix.hpp"
#include "pw/random.hpp"
#include "test_support.hpp"

using namespace pw;
using pw::test::diag;
using pw::test::e;
using pw::test::q;

TEST(Commutator, MatrixUnits) {
    EXPECT_EQ(commutator(e(2, 1, 2), e(2, 2, 1)), e(2, 1, 1) - e(2, 2, 2));
}

TEST(Commutator, IdentityIsCentral) {
    Rng rng(1);
    const auto b = random_matrix(3, rng);
    EXPECT_TRUE(commutator(QMatrix::identity(3), b).is_zero());
}

TEST(Commutator, DiagonalScalesEntry) {
    // [u, y]_{ij} = (alpha_i - alpha_j) y_{ij}: (0 - 2) at (1,3).
    EXPECT_EQ(commutator(diag({0, 1, 2}), e(3, 1, 3)), e(3, 1, 3) * q(-2));
}

TEST(Commutator, SizeMismatchThrows) {
    EXPECT_THROW(commutator(QMatrix::identity(2), QMatrix::identity(3)), DimensionError);
    EXPECT_THROW(QMatrix::identity(2) * QMatrix::identity(3), DimensionError);
}

TEST(Commutator, TraceIsZero) {
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        const auto a = random_matrix(4, rng);
        const auto b = random_matrix(4, rng);
        EXPECT_TRUE(commutator(a, b).trace().is_zero());
    }
}

TEST(IteratedCommutator, EmptyReturnsX) {
    const auto x = e(3, 2, 3) + e(3, 1, 1);
    EXPECT_EQ(iterated_commutator(std::vector<QMatrix>{}, x), x);
}

TEST(IteratedCommutator, TwoDiagonalBrackets) {
    const auto u = diag({0, 1});
    EXPECT_EQ(iterated_commutator(std::vector<QMatrix>{u, u}, e(2, 1, 2)), e(2, 1, 2));
}

TEST(IteratedCommutator, ShiftTwiceOnCorner) {
    const auto v = cyclic_shift(2, 1);
    const auto expected = e(3, 1, 1) - e(3, 2, 2) * q(2) + e(3, 3, 3);
    EXPECT_EQ(iterated_commutator(std::vector<QMatrix>{v, v}, e(3, 3, 1)), expected);
}

TEST(IteratedCommutator, MatchesNaiveOracle) {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        std::vector<QMatrix> us;
        std::vector<std::vector<std::vector<Rational>>> raw;
        for (int i = 0; i < 3; ++i) {
            us.push_back(random_matrix(3, rng));
            raw.push_back(test::rows_of(us.back()));
        }
        const auto x = random_matrix(3, rng);
        EXPECT_EQ(test::rows_of(iterated_commutator(us, x)), test::naive_nested_bracket(raw, test::rows_of(x)));
    }
}

TEST(IteratedCommutator, DiagonalPowersScaleEntries) {
    Rng rng(4);
    for (int t = 0; t < 40; ++t) {
        const std::size_t s = 1 + t % 5;
        const unsigned m = static_cast<unsigned>(t % 5);
        std::vector<Rational> alphas;
        for (std::size_t i = 0; i < s; ++i) alphas.push_back(random_rational(rng, 0.2));
        const auto u = QMatrix::diagonal(alphas);
        const auto x = random_matrix(s, rng);
        const auto got = iterated_commutator(std::vector<QMatrix>(m, u), x);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) EXPECT_EQ(got(i, j), (alphas[i] - alphas[j]).pow(m) * x(i, j));
    }
}

TEST(CyclicShift, SmallCases) {
    EXPECT_EQ(cyclic_shift(0, 1), QMatrix::identity(1));
    EXPECT_EQ(cyclic_shift(1, 1), e(2, 1, 2) + e(2, 2, 1));
    QMatrix expected(6);
    expected.set_block(0, 1, QMatrix::identity(2));
    expected.set_block(1, 2, QMatrix::identity(2));
    expected.set_block(2, 0, QMatrix::identity(2));
    const auto v = cyclic_shift(2, 2);
    EXPECT_EQ(v, expected);
    EXPECT_EQ(v * v * v, QMatrix::identity(6));
}

TEST(CyclicShift, PowerIsIdentity) {
    for (std::size_t k = 0; k <= 6; ++k) {
        for (std::size_t b = 1; b <= 3; ++b) {
            const auto v = cyclic_shift(k, b);
            EXPECT_EQ(matrix_power(v, static_cast<unsigned>(k + 1)), QMatrix::identity((k + 1) * b));
            if (k > 0) EXPECT_NE(matrix_power(v, static_cast<unsigned>(k)), QMatrix::identity((k + 1) * b));
        }
    }
}

TEST(Embed, Cases) {
    const auto a = e(2, 1, 1) - e(2, 2, 2);
    EXPECT_EQ(embed(a, 2), a);
    EXPECT_EQ(embed(a, 4), diag({1, -1, 0, 0}));
    EXPECT_EQ(embed(QMatrix::zero(1), 3), QMatrix::zero(3));
    EXPECT_THROW(embed(a, 1), DimensionError);
}

TEST(BlockFlatten, Cases) {
    Rng rng(5);
    const auto x = random_matrix(3, rng);
    EXPECT_EQ(block_flatten<Rational>({{x}}), x);
    const auto z = QMatrix::zero(1);
    const auto one = QMatrix::identity(1) * q(7);
    EXPECT_EQ(block_flatten<Rational>({{one, z}, {z, z}}), embed(one, 2));
    EXPECT_THROW(block_flatten<Rational>({{x, QMatrix::zero(2)}, {x, x}}), DimensionError);
    EXPECT_THROW(block_flatten<Rational>({{x, x}}), DimensionError);
}

TEST(BlockFlatten, IsRingHomomorphism) {
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<QMatrix>> a(2, std::vector<QMatrix>(2)), b = a, prod = a, sum = a;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a[i][j] = random_matrix(2, rng);
                b[i][j] = random_matrix(2, rng);
            }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                prod[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                sum[i][j] = a[i][j] + b[i][j];
            }
        EXPECT_EQ(block_flatten(a) * block_flatten(b), block_flatten(prod));
        EXPECT_EQ(block_flatten(a) + block_flatten(b), block_flatten(sum));
    }
}

TEST(Product, MatchesNaiveOracle) {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_matrix(5, rng, 0.5);
        const auto b = random_matrix(5, rng, 0.5);
        EXPECT_EQ(test::rows_of(a * b), test::naive_product(test::rows_of(a), test::rows_of(b)));
    }
}

TEST(Similarity, Cases) {
    Rng rng(8);
    const auto a = random_matrix(3, rng);
    EXPECT_EQ(similarity(QMatrix::identity(3), a), a);
    EXPECT_TRUE(similarity(e(3, 1, 2) + QMatrix::identity(3), QMatrix::zero(3)).is_zero());
    EXPECT_THROW(similarity(e(3, 1, 2), a), SingularMatrixError);
}

TEST(Similarity, PreservesTraceAndRank) {
    Rng rng(9);
    int checked = 0;
    while (checked < 20) {
        const auto p = random_matrix(4, rng, 0.2);
        if (rank(p) < 4) continue;
        const auto a = random_matrix(4, rng, 0.5);
        const auto b = similarity(p, a);
        EXPECT_EQ(b.trace(), a.trace());
        EXPECT_EQ(rank(b), rank(a));
        ++checked;
    }
}

TEST(Inverse, ProductIsIdentity) {
    Rng rng(10);
    for (int t = 0; t < 10; ++t) {
        const auto p = random_matrix(5, rng, 0.1);
        if (rank(p) < 5) {
            EXPECT_THROW(inverse(p), SingularMatrixError);
            continue;
        }
        EXPECT_EQ(p * inverse(p), QMatrix::identity(5));
        EXPECT_EQ(inverse(p) * p, QMatrix::identity(5));
    }
    EXPECT_EQ(rank(e(3, 1, 2) + e(3, 2, 3)), 2u);
}

TEST(Matrix, FromRowsRejectsNonSquare) {
    EXPECT_THROW(QMatrix::from_rows(std::vector<std::vector<Rational>>{{q(1), q(2)}}), DimensionError);
    EXPECT_EQ(QMatrix::from_rows({{q(1), q(2)}, {q(3), q(4)}}).trace(), q(5));
}

#include <gtest/gtest.h>

#include "pw/linsolve.hpp"
#include "test_support.hpp"

using namespace pw;
using pw::test::q;

TEST(SolveExact, OverdeterminedConsistent) {
    // x + y = 3, x - y = 1, 2x = 4
    const auto r = solve_exact<Rational>({{q(1), q(1)}, {q(1), q(-1)}, {q(2), q(0)}}, {q(3), q(1), q(4)}, 2);
    ASSERT_TRUE(r.solution);
    EXPECT_TRUE(r.full_column_rank());
    EXPECT_EQ((*r.solution)[0], q(2));
    EXPECT_EQ((*r.solution)[1], q(1));
}

TEST(SolveExact, Inconsistent) {
    const auto r = solve_exact<Rational>({{q(1), q(1)}, {q(2), q(2)}}, {q(1), q(3)}, 2);
    EXPECT_FALSE(r.solution);
    EXPECT_EQ(r.rank, 1u);
}

TEST(SolveExact, RankDeficientSetsFreeVariablesToZero) {
    const auto r = solve_exact<Rational>({{q(0), q(1), q(1)}}, {q(5)}, 3);
    ASSERT_TRUE(r.solution);
    EXPECT_FALSE(r.full_column_rank());
    EXPECT_EQ(*r.solution, (std::vector<Rational>{q(0), q(5), q(0)}));
}

TEST(SolveExact, FractionalSolution) {
    const auto r = solve_exact<Rational>({{q(3), q(1)}, {q(1), q(2)}}, {q(1), q(0)}, 2);
    ASSERT_TRUE(r.solution);
    EXPECT_EQ((*r.solution)[0], q(2, 5));
    EXPECT_EQ((*r.solution)[1], q(-1, 5));
}

TEST(SolveExact, ShapeErrors) {
    EXPECT_THROW(solve_exact<Rational>({{q(1)}}, {q(1), q(2)}, 1), DimensionError);
    EXPECT_THROW(solve_exact<Rational>({{q(1), q(2)}}, {q(1)}, 1), DimensionError);
}

#include <gtest/gtest.h>

#include <set>

#include "pw/admissible.hpp"
#include "pw/evaluate.hpp"
#include "pw/pc_poly.hpp"
#include "pw/poly_parse.hpp"
#include "pw/random.hpp"
#include "test_support.hpp"

using namespace pw;
using pw::test::e;
using pw::test::q;

namespace {

NormalWord word(std::initializer_list<std::pair<char, int>> letters) {
    NormalWord w;
    for (auto [kind, idx] : letters) w = w * (kind == 'U' ? NormalWord::u(idx) : NormalWord::letter(idx));
    return w;
}

PCPoly pc(int n, const OmegaSet& omega, std::initializer_list<std::pair<NormalWord, Rational>> terms) {
    PCPoly p(n, omega);
    for (const auto& [w, c] : terms) p.add(w, c);
    return p;
}

}  // namespace

TEST(NormalWord, MergesCommutingMonomials) {
    const auto a = word({{'U', 4}, {'U', 3}, {'X', 1}});
    EXPECT_EQ(a, word({{'U', 3}, {'U', 4}, {'X', 1}}));
    EXPECT_EQ(a.to_string(), "U3*U4*X1");
    EXPECT_EQ(NormalWord().to_string(), "1");
    EXPECT_NE(word({{'U', 3}, {'X', 1}}), word({{'X', 1}, {'U', 3}}));
}

TEST(FromMultilinear, Transcription) {
    const auto f = from_multilinear(parse_poly("X1*X2 - X2*X1"));
    EXPECT_EQ(f.term_count(), 2u);
    EXPECT_EQ(f.coefficient(Permutation({1, 2}), Partition::empty(2)), q(1));
    EXPECT_EQ(f.coefficient(Permutation({2, 1}), Partition::empty(2)), q(-1));
    EXPECT_TRUE(from_multilinear(MultilinearPoly(2)).is_zero());

    const auto s3 = from_multilinear(parse_poly("X1*X2*X3 - X1*X3*X2 - X2*X1*X3 + X2*X3*X1 + X3*X1*X2 - X3*X2*X1"));
    EXPECT_EQ(s3.term_count(), 6u);
    for (const auto& sigma : Permutation::all(3)) EXPECT_EQ(s3.coefficient(sigma, Partition::empty(3)), q(sigma.sign()));
}

TEST(AdmissiblePoly, AddValidatesShape) {
    AdmissiblePoly f(2, OmegaSet({3}));
    EXPECT_THROW(f.add(Permutation::identity(3), Partition({{3}, {}, {}}), q(1)), PreconditionError);
    EXPECT_THROW(f.add(Permutation::identity(2), Partition({{}, {}}), q(1)), PreconditionError);
    f.add(Permutation::identity(2), Partition({{3}, {}}), q(1));
    f.add(Permutation::identity(2), Partition({{3}, {}}), q(-1));
    EXPECT_TRUE(f.is_zero());
}

TEST(ExpandAdmissible, SingleBracket) {
    const OmegaSet omega({3});
    AdmissiblePoly f(1, omega);
    f.add(Permutation::identity(1), Partition(std::vector<Partition::Part>{{3}}), q(5, 2));
    const auto expected = pc(1, omega, {{word({{'U', 3}, {'X', 1}}), q(5, 2)}, {word({{'X', 1}, {'U', 3}}), q(-5, 2)}});
    EXPECT_EQ(expand_admissible(f), expected);
}

TEST(ExpandAdmissible, DoubleBracket) {
    const OmegaSet omega({3, 4});
    AdmissiblePoly f(1, omega);
    f.add(Permutation::identity(1), Partition(std::vector<Partition::Part>{{3, 4}}), q(1));
    const auto expected = pc(1, omega,
                             {{word({{'U', 3}, {'U', 4}, {'X', 1}}), q(1)},
                              {word({{'U', 3}, {'X', 1}, {'U', 4}}), q(-1)},
                              {word({{'U', 4}, {'X', 1}, {'U', 3}}), q(-1)},
                              {word({{'X', 1}, {'U', 3}, {'U', 4}}), q(1)}});
    EXPECT_EQ(expand_admissible(f), expected);
}

TEST(ExpandAdmissible, TwoVariableExampleLeadingWords) {
    const OmegaSet omega({3, 4});
    const std::vector<NormalWord> leading{
        word({{'U', 3}, {'U', 4}, {'X', 1}, {'X', 2}}), word({{'X', 2}, {'U', 3}, {'U', 4}, {'X', 1}}),
        word({{'U', 3}, {'X', 1}, {'U', 4}, {'X', 2}}), word({{'U', 4}, {'X', 2}, {'U', 3}, {'X', 1}}),
        word({{'U', 4}, {'X', 1}, {'U', 3}, {'X', 2}}), word({{'U', 3}, {'X', 2}, {'U', 4}, {'X', 1}}),
        word({{'X', 1}, {'U', 3}, {'U', 4}, {'X', 2}}), word({{'U', 3}, {'U', 4}, {'X', 2}, {'X', 1}})};
    AdmissiblePoly total(2, omega);
    std::size_t idx = 0;
    for (const auto& alpha : enumerate_partitions(omega, 2)) {
        for (const auto& sigma : Permutation::all(2)) {
            AdmissiblePoly basis(2, omega);
            basis.add(sigma, alpha, q(1));
            EXPECT_TRUE(expand_admissible(basis).terms().contains(leading[idx]))
                << sigma.to_string() << " " << alpha.to_string();
            total += basis;
            ++idx;
        }
    }
    std::set<NormalWord> distinct(leading.begin(), leading.end());
    EXPECT_EQ(distinct.size(), 8u);
    EXPECT_EQ(extract_coefficients(expand_admissible(total), 2, omega), total);
}

TEST(ExtractCoefficients, ZeroAndNonAdmissible) {
    const OmegaSet omega({3});
    EXPECT_TRUE(extract_coefficients(PCPoly(1, omega), 1, omega).is_zero());
    EXPECT_THROW(extract_coefficients(pc(1, omega, {{word({{'U', 3}, {'X', 1}}), q(1)}}), 1, omega),
                 NotAdmissibleError);
    EXPECT_THROW(extract_coefficients(pc(1, omega, {{word({{'X', 1}}), q(1)}}), 1, omega), NotAdmissibleError);
}

TEST(ExtractCoefficients, RoundTripRandom) {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + t % 3;
        const int m = t % 3;
        std::vector<int> elems;
        for (int w = 0; w < m; ++w) elems.push_back(n + 1 + w);
        const OmegaSet omega(elems);
        const auto f = random_admissible(n, omega, 0.4, rng);
        const auto p = expand_admissible(f);
        EXPECT_EQ(extract_coefficients(p, n, omega), f);
        EXPECT_EQ(expand_admissible(extract_coefficients(p, n, omega)), p);
    }
}

TEST(AdmissibleBasis, FullRankAtSmallSizes) {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 2; ++m) {
            std::vector<int> elems;
            for (int w = 0; w < m; ++w) elems.push_back(n + 1 + w);
            const auto r = admissible_basis_rank(n, OmegaSet(elems));
            std::size_t expected = 1;
            for (int i = 2; i <= n; ++i) expected *= static_cast<std::size_t>(i);
            for (int i = 0; i < m; ++i) expected *= static_cast<std::size_t>(n);
            EXPECT_EQ(r.basis_size, expected);
            EXPECT_EQ(r.rank, r.basis_size) << "n=" << n << " m=" << m;
        }
    }
}

TEST(Evaluate, Examples) {
    WitnessAssignment w(2);
    w.set_x(1, e(2, 1, 2));
    w.set_x(2, e(2, 2, 1));
    EXPECT_EQ(evaluate(parse_poly("X1*X2 - X2*X1"), w), e(2, 1, 1) - e(2, 2, 2));

    const OmegaSet omega({3});
    AdmissiblePoly f(1, omega);
    f.add(Permutation::identity(1), Partition(std::vector<Partition::Part>{{3}}), q(7));
    WitnessAssignment v(3);
    Rng rng(12);
    v.set_x(1, random_matrix(3, rng));
    v.set_u(3, QMatrix::identity(3));
    EXPECT_TRUE(evaluate(f, v).is_zero());
}

TEST(Evaluate, ErrorsOnBadAssignment) {
    const OmegaSet omega({3, 4});
    AdmissiblePoly f(1, omega);
    f.add(Permutation::identity(1), Partition(std::vector<Partition::Part>{{3, 4}}), q(1));
    WitnessAssignment w(2);
    w.set_x(1, e(2, 1, 2));
    w.set_u(3, e(2, 1, 2));
    EXPECT_THROW(evaluate(f, w), ArityError);
    w.set_u(4, e(2, 2, 1));
    EXPECT_THROW(evaluate(f, w), CommutativityError);
    EXPECT_THROW(w.set_x(2, QMatrix::identity(3)), DimensionError);
}

TEST(Evaluate, AgreesWithExpansionAndIsLinear) {
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + t % 3;
        const int m = t % 3;
        std::vector<int> elems;
        for (int w = 0; w < m; ++w) elems.push_back(n + 1 + w);
        const OmegaSet omega(elems);
        const auto f = random_admissible(n, omega, 0.5, rng);
        const auto g = random_admissible(n, omega, 0.5, rng);
        const std::size_t s = 1 + static_cast<std::size_t>(t % 3);
        WitnessAssignment w(s);
        for (int i = 1; i <= n; ++i) w.set_x(i, random_matrix(s, rng));
        const auto us = random_commuting_family(s, omega.size(), rng);
        for (std::size_t k = 0; k < omega.size(); ++k) w.set_u(omega.elements()[k], us[k]);
        EXPECT_EQ(evaluate(f, w), evaluate(expand_admissible(f), w));
        const Rational c = random_nonzero_rational(rng);
        EXPECT_EQ(evaluate(f + c * g, w), evaluate(f, w) + evaluate(g, w) * c);
    }
}

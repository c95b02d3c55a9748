#include <gtest/gtest.h>

#include "coxdepth/polynomial.hpp"

using coxdepth::BivariatePolynomial;

TEST(Polynomial, AddAndQuery)
{
    BivariatePolynomial p;
    EXPECT_TRUE(p.empty());
    EXPECT_EQ(p.to_string(), "0");
    p.add(0, 0, 1);
    p.add(1, 1, 2);
    p.add(1, 1, -2);
    EXPECT_EQ(p.terms().size(), 1u);
    p.add(6, 4, 1);
    p.add(2, 2, 2);
    EXPECT_EQ(p.coefficient(2, 2), 2);
    EXPECT_EQ(p.coefficient(3, 3), 0);
    EXPECT_EQ(p.total(), 4);
    EXPECT_EQ(p.max_q_degree(), 6);
    EXPECT_EQ(p.max_t_degree(), 4);
    EXPECT_EQ(p.to_string(), "1 + 2q^2t^2 + q^6t^4");
}

TEST(Polynomial, Formatting)
{
    EXPECT_EQ(BivariatePolynomial::monomial(1, 1, 2).to_string(), "2qt");
    EXPECT_EQ(BivariatePolynomial::monomial(0, 3).to_string(), "t^3");
    EXPECT_EQ(BivariatePolynomial::monomial(2, 0, -1).to_string(), "-q^2");
    BivariatePolynomial p = BivariatePolynomial::monomial(0, 0);
    p.add(1, 0, -3);
    EXPECT_EQ(p.to_string(), "1 - 3q");
}

TEST(Polynomial, Arithmetic)
{
    // (1 + qt)^2 = 1 + 2qt + q^2t^2
    BivariatePolynomial a = BivariatePolynomial::monomial(0, 0);
    a += BivariatePolynomial::monomial(1, 1);
    const auto sq = a * a;
    EXPECT_EQ(sq.to_string(), "1 + 2qt + q^2t^2");
    EXPECT_EQ(sq.total(), 4);
    BivariatePolynomial neg = a;
    neg += BivariatePolynomial::monomial(1, 1, -1);
    neg += BivariatePolynomial::monomial(0, 0, -1);
    EXPECT_TRUE(neg.empty());
    EXPECT_EQ(neg, BivariatePolynomial{});
}

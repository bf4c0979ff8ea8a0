#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nlsphere/errors.hpp"
#include "nlsphere/quadrature.hpp"
#include "oracles.hpp"

using namespace nlsphere;

TEST(JacobiMoments, LegendreWeight)
{
    const auto mu = jacobi_moments(0.0, 0.0, 3);
    ASSERT_EQ(mu.size(), 3u);
    EXPECT_NEAR(mu[0], 2.0, 1e-15);
    EXPECT_NEAR(mu[1], 0.0, 1e-15);
    EXPECT_NEAR(mu[2], -2.0 / 3.0, 1e-15);
}

TEST(JacobiMoments, InverseSquareRootMass)
{
    EXPECT_NEAR(jacobi_moments(-0.5, 0.0, 1)[0], 2.0 * std::numbers::sqrt2, 1e-14);
}

TEST(JacobiMoments, MatchesTanhSinh)
{
    const auto mu = jacobi_moments(0.3, 0.0, 20);
    for (int k = 0; k < 20; ++k) {
        const double ref = oracle::jacobi_moment(0.3, 0.0, k);
        EXPECT_NEAR(mu[k], ref, 1e-10 * std::abs(ref)) << k;
    }
}

TEST(JacobiMoments, GeneralBeta)
{
    const auto mu = jacobi_moments(0.25, -0.4, 12);
    for (int k = 0; k < 12; ++k) {
        const double ref = oracle::jacobi_moment(0.25, -0.4, k);
        EXPECT_NEAR(mu[k], ref, 1e-10 * std::max(1.0, std::abs(ref))) << k;
    }
}

// Forward recurrence stays accurate at large counts; the oracle is sampled at
// a spread of indices to keep the run short.
TEST(JacobiMoments, ForwardRecurrenceStableTo512)
{
    for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
        const auto mu = jacobi_moments(a, 0.0, 512);
        for (int k : {0, 1, 2, 7, 63, 128, 255, 400, 511}) {
            const double ref = oracle::jacobi_moment(a, 0.0, k);
            EXPECT_NEAR(mu[k], ref, 1e-10 * std::abs(mu[0])) << a << ' ' << k;
        }
    }
}

TEST(JacobiMoments, Validation)
{
    EXPECT_THROW(jacobi_moments(-1.0, 0.0, 4), DomainError);
    EXPECT_THROW(jacobi_moments(0.0, -1.5, 4), DomainError);
    EXPECT_THROW(jacobi_moments(0.0, 0.0, 0), DomainError);
}

TEST(CCWeights, Simpson)
{
    const CCRule r = cc_weights(0.0, 0.0, 3);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_NEAR(r.nodes[0], 1.0, 1e-15);
    EXPECT_NEAR(r.nodes[1], 0.0, 1e-15);
    EXPECT_NEAR(r.nodes[2], -1.0, 1e-15);
    EXPECT_NEAR(r.weights[0], 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(r.weights[1], 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(r.weights[2], 1.0 / 3.0, 1e-15);
}

TEST(CCWeights, PolynomialExactness)
{
    const CCRule r = cc_weights(0.0, 0.0, 9);
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r.weights[j] * std::pow(r.nodes[j], 6);
    EXPECT_NEAR(s, 2.0 / 7.0, 1e-14);
}

TEST(CCWeights, SingularSecondMoment)
{
    const CCRule r = cc_weights(-0.5, 0.0, 17);
    const auto mu = jacobi_moments(-0.5, 0.0, 3);
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r.weights[j] * r.nodes[j] * r.nodes[j];
    // x^2 = (T_0 + T_2) / 2
    EXPECT_NEAR(s, 0.5 * (mu[0] + mu[2]), 1e-14);
    // and in closed form: int x^2 (1-x)^{-1/2} = 2 sqrt2 * 7/15
    EXPECT_NEAR(s, 2.0 * std::numbers::sqrt2 * 7.0 / 15.0, 1e-13);
}

TEST(CCWeights, NodesAndInvariants)
{
    for (int n : {2, 5, 8, 33, 100}) {
        const CCRule r = cc_weights(0.4, 0.0, n);
        double sum = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) EXPECT_LT(r.nodes[j], r.nodes[j - 1]);
            EXPECT_NEAR(r.one_minus_nodes[j], 1.0 - r.nodes[j], 1e-15);
            sum += r.weights[j];
        }
        EXPECT_NEAR(r.nodes.front(), 1.0, 0.0);
        EXPECT_NEAR(r.nodes.back(), -1.0, 0.0);
        EXPECT_NEAR(sum, jacobi_moments(0.4, 0.0, 1)[0], 1e-13 * sum);
    }
}

TEST(CCWeights, ChebyshevExactness)
{
    for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9})
        for (int n : {8, 33, 128}) {
            const CCRule r = cc_weights(a, 0.0, n + 1);
            const auto mu = jacobi_moments(a, 0.0, n + 1);
            for (int k = 0; k <= n; ++k) {
                double s = 0.0;
                for (std::size_t j = 0; j < r.size(); ++j)
                    s += r.weights[j] * std::cos(k * std::acos(r.nodes[j]));
                ASSERT_NEAR(s, mu[k], 1e-12 * std::abs(mu[0])) << a << ' ' << n << ' ' << k;
            }
        }
}

TEST(CCWeights, DirectAndDctAgree)
{
    for (double a : {-0.5, 0.0, 0.7})
        for (int n : {2, 3, 9, 64, 257}) {
            const CCRule d = cc_weights(a, 0.1, n, CosineSum::Direct);
            const CCRule f = cc_weights(a, 0.1, n, CosineSum::DCT);
            for (std::size_t j = 0; j < d.size(); ++j)
                ASSERT_NEAR(d.weights[j], f.weights[j], 1e-13) << a << ' ' << n << ' ' << j;
        }
}

TEST(CCWeights, Validation)
{
    EXPECT_THROW(cc_weights(0.0, 0.0, 1), DomainError);
    EXPECT_THROW(cc_weights(-1.0, 0.0, 8), DomainError);
}

TEST(GaussLegendre, ClassicalRules)
{
    const GLRule one = gauss_legendre(1);
    EXPECT_EQ(one.nodes[0], 0.0);
    EXPECT_NEAR(one.weights[0], 2.0, 1e-15);
    const GLRule two = gauss_legendre(2);
    EXPECT_NEAR(two.nodes[0], 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(two.nodes[1], -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(two.weights[0], 1.0, 1e-15);
    EXPECT_NEAR(two.weights[1], 1.0, 1e-15);
}

TEST(GaussLegendre, ExactThroughDegree2nMinus1)
{
    const GLRule r = gauss_legendre(20);
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 38);
    EXPECT_NEAR(s, 2.0 / 39.0, 1e-14);
}

TEST(GaussLegendre, SymmetryAndMass)
{
    for (int n : {3, 10, 64, 129, 401}) {
        const GLRule r = gauss_legendre(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            EXPECT_EQ(r.nodes[i], -r.nodes[n - 1 - i]);
            EXPECT_EQ(r.weights[i], r.weights[n - 1 - i]);
            EXPECT_GT(r.weights[i], 0.0);
            if (i) EXPECT_LT(r.nodes[i], r.nodes[i - 1]);
            sum += r.weights[i];
        }
        EXPECT_NEAR(sum, 2.0, 1e-14);
    }
}

TEST(GaussLegendre, NodesAreRoots)
{
    for (int n : {50, 201}) {
        const GLRule r = gauss_legendre(n);
        for (double x : r.nodes)
            EXPECT_LE(std::abs(oracle::legendre(n, x) / oracle::legendre_derivative(n, x)), 1e-15) << n << ' ' << x;
    }
}

TEST(GaussLegendre, Validation) { EXPECT_THROW(gauss_legendre(0), DomainError); }

#include <gtest/gtest.h>

#include <harmspec/ball_embedding.hpp>
#include <harmspec/error.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace harmspec;

TEST(ExactBallSpectrum, BlockValues)
{
    const ExactBallSpectrum s(2, 2.0);
    EXPECT_DOUBLE_EQ(s(1), std::pow(2.0, -1.0));
    EXPECT_DOUBLE_EQ(s(2), std::pow(2.0, -2.0));
    EXPECT_DOUBLE_EQ(s(3), std::pow(2.0, -2.0));
    EXPECT_DOUBLE_EQ(s(4), std::pow(2.0, -3.0));
    const ExactBallSpectrum t(3, 3.0);
    EXPECT_DOUBLE_EQ(t(1), std::pow(3.0, -1.5));
    EXPECT_DOUBLE_EQ(t(4), std::pow(3.0, -2.5));
    EXPECT_DOUBLE_EQ(t(5), std::pow(3.0, -3.5));
}

TEST(ExactBallSpectrum, PrefixIsCertifiedAndMonotone)
{
    const ExactBallSpectrum s(4, 1.5);
    const auto p = s.prefix(200);
    EXPECT_TRUE(p.tail_certified());
    ASSERT_EQ(p.size(), 200u);
    for (std::size_t i = 0; i < p.size(); ++i)
        EXPECT_EQ(p[i], s(static_cast<std::int64_t>(i + 1)));
}

TEST(ExactBallSpectrum, Errors)
{
    EXPECT_THROW(ExactBallSpectrum(2, 1.0), DomainError);
    EXPECT_THROW(ExactBallSpectrum(1, 2.0), DomainError);
    EXPECT_THROW(exact_singular_value(ExactBallSpectrum(2, 2.0), 0), DomainError);
}

TEST(ExactGauge, ClosedFormParameters)
{
    const ExactBallSpectrum s(3, 2.0);
    const auto g = exact_gauge(s);
    EXPECT_DOUBLE_EQ(g.a, std::sqrt(1.0) * std::log(2.0));
    EXPECT_DOUBLE_EQ(g.alpha, 0.5);
    EXPECT_DOUBLE_EQ(g.value, 1.0 / std::sqrt(2.0));
    EXPECT_TRUE(g.certified());
    EXPECT_DOUBLE_EQ(exact_gauge(ExactBallSpectrum(4, 2.0)).a, std::cbrt(3.0) * std::log(2.0));
    EXPECT_DOUBLE_EQ(exact_gauge(ExactBallSpectrum(2, 5.0)).a, 0.5 * std::log(5.0));
}

TEST(ExactGauge, NoIndexExceedsTheGauge)
{
    for (int d = 2; d <= 4; ++d)
        for (double gamma : {1.1, 2.0, 10.0}) {
            const ExactBallSpectrum s(d, gamma);
            const auto g = exact_gauge(s);
            const std::int64_t nmax = h_dim(d, 50);
            // direct summation over every n, independent of the block-end shortcut
            for (std::int64_t n = 1; n <= nmax; ++n)
                ASSERT_LE(s(n) * std::exp(g.a * std::pow(static_cast<double>(n), g.alpha)),
                          g.value * (1.0 + 1e-12))
                    << "d=" << d << " gamma=" << gamma << " n=" << n;
            EXPECT_LE(sup_log_defect(s, nmax), -0.5 * std::log(gamma) + 1e-12);
        }
}

TEST(ExactGauge, AttainedInTwoDimensions)
{
    for (double gamma : {1.1, 2.0, 10.0}) {
        const ExactBallSpectrum s(2, gamma);
        EXPECT_NEAR(std::exp(sup_log_defect(s, h_dim(2, 50))), 1.0 / std::sqrt(gamma), 1e-14);
    }
}

TEST(ExactPrefixGauge, CertificationRules)
{
    const ExactBallSpectrum s(2, 2.0);
    const auto closed = exact_gauge(s);
    const auto at_closed = exact_prefix_gauge(s, closed.a, closed.alpha, 10);
    EXPECT_TRUE(at_closed.certified());
    EXPECT_NEAR(at_closed.value, closed.value, 1e-15);
    // a smaller rate: the tail decays, so a long enough prefix certifies the sup
    EXPECT_TRUE(exact_prefix_gauge(s, 0.5 * closed.a, 1.0, 50).certified());
    // a larger rate: the sequence leaves the class, no certificate
    EXPECT_FALSE(exact_prefix_gauge(s, 2.0 * closed.a, 1.0, 50).certified());
}

TEST(Asymptotics, LogRateAlongBlockEnds)
{
    for (int d = 2; d <= 4; ++d) {
        const ExactBallSpectrum s(d, 3.0);
        const double c = asymptotic_log_rate(s);
        const std::int64_t n = h_dim(d, 400);
        const double ratio = std::log(s(n)) / std::pow(static_cast<double>(n), 1.0 / (d - 1));
        EXPECT_NEAR(ratio / c, 1.0, 0.01) << "d=" << d;
    }
}

TEST(ProductGap, MatchesDirectFormulaAndLimits)
{
    const std::vector<double> a{1.0, 4.0, 9.0};
    for (double x : {0.0, 0.5, 3.0, 100.0}) {
        const double direct = std::cbrt((x + 1.0) * (x + 4.0) * (x + 9.0)) - x;
        EXPECT_NEAR(product_gap(a, x), direct, 1e-12 * (1 + x));
    }
    EXPECT_DOUBLE_EQ(product_gap_limit(a), 14.0 / 3.0);
    EXPECT_NEAR(product_gap(a, 1e12), 14.0 / 3.0, 1e-9);
    EXPECT_EQ(product_gap(std::vector<double>{0.0, 2.0}, 0.0), 0.0);
}

TEST(ProductGap, NondecreasingForRandomVectors)
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> a(2 + t % 5);
        for (double& x : a)
            x = u(rng);
        double prev = product_gap(a, 0.0);
        for (int i = 0; i <= 120; ++i) {
            const double x = std::pow(10.0, -6.0 + 0.1 * i);
            const double v = product_gap(a, x);
            EXPECT_GE(v, prev * (1 - 1e-14));
            prev = v;
        }
        EXPECT_NEAR(product_gap(a, 1e6), product_gap_limit(a), 1e-4);
    }
}

TEST(ProductGap, Errors)
{
    EXPECT_THROW(product_gap(std::vector<double>{}, 1.0), DomainError);
    EXPECT_THROW(product_gap(std::vector<double>{-1.0}, 1.0), DomainError);
    EXPECT_THROW(product_gap(std::vector<double>{1.0}, -1.0), DomainError);
}

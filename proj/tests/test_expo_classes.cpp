#include <gtest/gtest.h>

#include <harmspec/error.hpp>
#include <harmspec/expo_classes.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

using namespace harmspec;

TEST(FiniteSpectrum, RejectsIncreasingOrNegative)
{
    EXPECT_THROW(FiniteSpectrum({1.0, 2.0}), DomainError);
    EXPECT_THROW(FiniteSpectrum({1.0, -0.5}), DomainError);
    EXPECT_NO_THROW(FiniteSpectrum({2.0, 2.0, 0.0}));
}

TEST(FiniteSpectrum, FromUnsortedTakesModuliAndSorts)
{
    const auto s = FiniteSpectrum::from_unsorted({0.1, -3.0, 2.0});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], 3.0);
    EXPECT_EQ(s[1], 2.0);
    EXPECT_EQ(s[2], 0.1);
}

TEST(SequenceGauge, GeometricSequenceHasUnitGauge)
{
    std::vector<double> v;
    for (int n = 1; n <= 50; ++n)
        v.push_back(std::exp(-0.7 * n));
    const auto g = sequence_gauge(FiniteSpectrum(v), 0.7, 1.0);
    EXPECT_NEAR(g.value, 1.0, 1e-13);
    EXPECT_FALSE(g.certified());
    EXPECT_TRUE(sequence_gauge(FiniteSpectrum(v, true), 0.7, 1.0).certified());
}

TEST(SequenceGauge, HandlesZerosAndHugeExponents)
{
    const auto g = sequence_gauge(FiniteSpectrum({1e-300, 0.0}), 800.0, 1.0);
    EXPECT_NEAR(std::log(g.value), 800.0 - 300.0 * std::log(10.0), 1e-9);
    EXPECT_EQ(sequence_gauge(FiniteSpectrum({0.0, 0.0}), 1.0, 1.0).value, 0.0);
}

TEST(SequenceGauge, ParameterErrors)
{
    const FiniteSpectrum s({1.0});
    EXPECT_THROW(sequence_gauge(s, 0.0, 1.0), DomainError);
    EXPECT_THROW(sequence_gauge(s, 1.0, -1.0), DomainError);
    EXPECT_THROW(sequence_gauge(s, std::nan(""), 1.0), DomainError);
}

TEST(SumRate, EqualRatesHalveByPowerOfTwo)
{
    for (double alpha : {0.25, 0.5, 1.0, 2.0})
        for (double a : {0.1, 1.0, 3.7}) {
            const double r[] = {a, a};
            EXPECT_EQ(sum_rate(r, alpha), std::pow(2.0, -alpha) * a);
        }
}

TEST(SumRate, SingleRateIsUnchangedAndOrderIrrelevant)
{
    const double one[] = {2.5};
    EXPECT_EQ(sum_rate(one, 0.5), 2.5);
    const double r1[] = {1.0, 2.0, 5.0};
    const double r2[] = {5.0, 1.0, 2.0};
    EXPECT_EQ(sum_rate(r1, 0.5), sum_rate(r2, 0.5));
    double direct = 0.0;
    for (double a : r1)
        direct += std::pow(a, -1.0 / 0.5);
    EXPECT_NEAR(sum_rate(r1, 0.5), std::pow(direct, -0.5), 1e-14);
}

TEST(SumRate, IsBelowEachRate)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> r(2 + t % 5);
        for (double& x : r)
            x = u(rng);
        const double s = sum_rate(r, u(rng) / 5.0);
        for (double x : r)
            EXPECT_LE(s, x);
    }
}

TEST(SumGauge, MismatchedAlphaIsRejected)
{
    const ExponentialGauge g[] = {{1.0, 0.5, 1.0}, {1.0, 1.0, 1.0}};
    EXPECT_THROW(sum_gauge(g), MismatchError);
    EXPECT_THROW(sum_gauge(std::span<const ExponentialGauge>{}), DomainError);
}

TEST(SumGauge, DominatesSumOfDiagonalOperators)
{
    // Property: for diagonal A, B in the classes (a_i, alpha) with gauges g_i,
    // the singular values of A + B obey the summed gauge.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const double alpha = 0.3 + u(rng);
        const double a1 = 0.2 + u(rng), a2 = 0.2 + u(rng);
        const int m = 30;
        Eigen::VectorXd d1(m), d2(m);
        for (int n = 1; n <= m; ++n) {
            d1(n - 1) = u(rng) * std::exp(-a1 * std::pow(n, alpha));
            d2(n - 1) = u(rng) * std::exp(-a2 * std::pow(n, alpha));
        }
        auto gauge_of = [&](const Eigen::VectorXd& d, double a) {
            std::vector<double> v(d.data(), d.data() + d.size());
            return sequence_gauge(FiniteSpectrum::from_unsorted(v), a, alpha);
        };
        // random placement in a common basis keeps the summands genuinely non-commuting
        Eigen::MatrixXd q = Eigen::MatrixXd::Random(m, m);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(q);
        const Eigen::MatrixXd Q = qr.householderQ();
        const Eigen::MatrixXd A = d1.asDiagonal();
        const Eigen::MatrixXd B = Q * d2.asDiagonal() * Q.transpose();
        const ExponentialGauge g[] = {gauge_of(d1, a1), gauge_of(d2, a2)};
        const auto gs = sum_gauge(g);
        const Eigen::VectorXd sv = (A + B).jacobiSvd().singularValues();
        for (int n = 1; n <= m; ++n)
            EXPECT_LE(sv(n - 1) * std::exp(gs.a * std::pow(n, alpha)), gs.value * (1 + 1e-10));
    }
}

TEST(ComposeGauge, ScalesByNorms)
{
    const ExponentialGauge g{1.0, 0.5, 2.0, GaugeStatus::exact};
    const auto c = compose_gauge(0.5, g, 3.0);
    EXPECT_EQ(c.value, 3.0);
    EXPECT_EQ(c.status, GaugeStatus::upper_bound);
    EXPECT_EQ(compose_gauge(0.0, g, 3.0).value, 0.0);
    EXPECT_THROW(compose_gauge(-1.0, g, 1.0), DomainError);
}

TEST(ComposeGauge, BoundsRandomProducts)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int m = 25;
    for (int t = 0; t < 50; ++t) {
        Eigen::VectorXd d(m);
        for (int n = 1; n <= m; ++n)
            d(n - 1) = std::exp(-0.8 * n);
        const Eigen::MatrixXd L = Eigen::MatrixXd::Random(m, m);
        const Eigen::MatrixXd R = Eigen::MatrixXd::Random(m, m);
        const Eigen::MatrixXd P = L * d.asDiagonal() * R;
        const double nl = L.jacobiSvd().singularValues()(0);
        const double nr = R.jacobiSvd().singularValues()(0);
        const auto mid = sequence_gauge(FiniteSpectrum(std::vector<double>(d.data(), d.data() + m)), 0.8, 1.0);
        const auto g = compose_gauge(nl, mid, nr);
        const Eigen::VectorXd sv = P.jacobiSvd().singularValues();
        for (int n = 1; n <= m; ++n)
            EXPECT_LE(sv(n - 1) * std::exp(0.8 * n), g.value * (1 + 1e-9));
    }
}

TEST(EigenRateTransfer, DividesRateAndBoundsRandomMatrices)
{
    const ExponentialGauge g{3.0, 0.5, 1.5, GaugeStatus::exact};
    const auto e = eigen_rate_transfer(g);
    EXPECT_EQ(e.a, 2.0);
    EXPECT_EQ(e.value, 1.5);
    EXPECT_EQ(e.status, GaugeStatus::upper_bound);

    // A = U diag(s) V^T with s_n = exp(-a n^alpha): eigenvalues obey the transferred class.
    std::mt19937_64 rng(5);
    const int m = 30;
    for (int t = 0; t < 50; ++t) {
        const double a = 0.5, alpha = 1.0;
        Eigen::VectorXd s(m);
        for (int n = 1; n <= m; ++n)
            s(n - 1) = std::exp(-a * std::pow(n, alpha));
        Eigen::HouseholderQR<Eigen::MatrixXd> q1(Eigen::MatrixXd::Random(m, m)), q2(Eigen::MatrixXd::Random(m, m));
        const Eigen::MatrixXd U = q1.householderQ(), V = q2.householderQ();
        const Eigen::MatrixXd A = U * s.asDiagonal() * V.transpose();
        Eigen::EigenSolver<Eigen::MatrixXd> es(A);
        std::vector<double> mod;
        for (int i = 0; i < m; ++i)
            mod.push_back(std::abs(es.eigenvalues()(i)));
        const auto op = sequence_gauge(FiniteSpectrum(std::vector<double>(s.data(), s.data() + m)), a, alpha);
        const auto tr = eigen_rate_transfer(op);
        const auto ev = sequence_gauge(FiniteSpectrum::from_unsorted(mod), tr.a, tr.alpha);
        EXPECT_LE(ev.value, tr.value * (1 + 1e-8));
    }
}

TEST(Interleave, SummedSpectrumLeavesTheClass)
{
    for (int m : {20, 40}) {
        const auto sp = interleave_counterexample(1.0, 1.0, m);
        EXPECT_NEAR(sequence_gauge(sp.a, 1.0, 1.0).value, 1.0, 1e-12);
        EXPECT_LE(sequence_gauge(sp.sum, 0.5, 1.0).value, 1.0 + 1e-12);
        EXPECT_GT(sequence_gauge(sp.sum, 1.0, 1.0).value, 1e3);
    }
    EXPECT_THROW(interleave_counterexample(1.0, 1.0, 0), DomainError);
}

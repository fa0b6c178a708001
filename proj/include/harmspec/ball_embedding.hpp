#pragma once

// Exact spectrum of the restriction J : h^2(B(gamma)) -> h^2(B) between
// concentric balls. Its singular values come in degree blocks:
//
//     s_n(J) = gamma^{-(k + d/2)}   for h_d(k-1) < n <= h_d(k),
//
// the value of block k repeated N_d(k) times.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dims.hpp"
#include "error.hpp"
#include "expo_classes.hpp"

namespace harmspec {

/// n |-> prefactor * exp(-rate * n^alpha).
struct DecayBound {
    double prefactor = 0.0;
    double rate = 1.0;
    double alpha = 1.0;

    double operator()(double n) const
    {
        if (prefactor == 0.0)
            return 0.0;
        return prefactor * std::exp(-rate * std::pow(n, alpha));
    }
};

/// (d-1)!/2
inline double half_factorial(int d)
{
    detail::require_dimension(d);
    double fact = 1.0;
    for (int i = 2; i <= d - 1; ++i)
        fact *= i;
    return fact / 2.0;
}

/// ((d-1)!/2)^{1/(d-1)}: converts log gamma into the stretched-exponential rate.
inline double block_rate_factor(int d)
{
    return std::pow(half_factorial(d), 1.0 / (d - 1));
}

class ExactBallSpectrum {
public:
    ExactBallSpectrum(int d, double gamma) : d_(d), gamma_(gamma), log_gamma_(std::log(gamma))
    {
        detail::require_dimension(d);
        if (!(gamma > 1.0) || !std::isfinite(gamma))
            throw DomainError("dilation gamma must be > 1");
    }

    int d() const { return d_; }
    double gamma() const { return gamma_; }
    double log_gamma() const { return log_gamma_; }

    /// log s_n for block k, i.e. -(k + d/2) log gamma.
    double log_block_value(std::int64_t k) const
    {
        return -(static_cast<double>(k) + 0.5 * d_) * log_gamma_;
    }

    double block_value(std::int64_t k) const { return std::pow(gamma_, -(static_cast<double>(k) + 0.5 * d_)); }

    /// s_n, n >= 1.
    double operator()(std::int64_t n) const
    {
        return block_value(degree_of_index(d_, n));
    }

    /// First `count` singular values. The tail beyond them is known in closed
    /// form, which the flag records.
    FiniteSpectrum prefix(std::int64_t count) const
    {
        if (count < 0)
            throw DomainError("prefix length must be nonnegative");
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(count));
        std::int64_t n = 1;
        for (std::int64_t k = 0; n <= count; ++k) {
            const std::int64_t end = h_dim(d_, k);
            const double s = block_value(k);
            for (; n <= end && n <= count; ++n)
                v.push_back(s);
        }
        return FiniteSpectrum(std::move(v), true);
    }

private:
    int d_;
    double gamma_;
    double log_gamma_;
};

/// s_n of the concentric-ball restriction.
inline double exact_singular_value(const ExactBallSpectrum& spec, std::int64_t n)
{
    if (n < 1)
        throw DomainError("singular value index must be >= 1");
    return spec(n);
}

/// Closed-form gauge: rate c = ((d-1)!/2)^{1/(d-1)} log gamma,
/// alpha = 1/(d-1), value gamma^{-1/2}.
inline ExponentialGauge exact_gauge(const ExactBallSpectrum& spec)
{
    ExponentialGauge g;
    g.a = block_rate_factor(spec.d()) * spec.log_gamma();
    g.alpha = 1.0 / (spec.d() - 1);
    g.value = std::exp(-0.5 * spec.log_gamma());
    g.status = GaugeStatus::exact;
    return g;
}

/// lim log s_n / n^{1/(d-1)}.
inline double asymptotic_log_rate(const ExactBallSpectrum& spec)
{
    return -block_rate_factor(spec.d()) * spec.log_gamma();
}

/// max over 1 <= n <= n_max of log s_n + (n (d-1)!/2)^{1/(d-1)} log gamma.
/// Within a block log s_n is constant, so only the last index of each block
/// (capped at n_max) is evaluated.
inline double sup_log_defect(const ExactBallSpectrum& spec, std::int64_t n_max)
{
    if (n_max < 1)
        throw DomainError("n_max must be >= 1");
    const int d = spec.d();
    const double half_fact = half_factorial(d);
    const double alpha = 1.0 / (d - 1);
    double best = -std::numeric_limits<double>::infinity();
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t start = h_dim(d, k - 1) + 1;
        if (start > n_max)
            break;
        const std::int64_t n = std::min(h_dim(d, k), n_max);
        const double v = spec.log_block_value(k)
                         + std::pow(static_cast<double>(n) * half_fact, alpha) * spec.log_gamma();
        best = std::max(best, v);
    }
    return best;
}

/// Gauge of the exact spectrum over n <= count at arbitrary (a, alpha),
/// evaluated at block ends. Marked exact when the analytic tail estimate
/// cannot beat the prefix, or when (a, alpha) are the closed-form parameters.
inline ExponentialGauge exact_prefix_gauge(const ExactBallSpectrum& spec, double a, double alpha,
                                           std::int64_t count)
{
    detail::require_class_parameters(a, alpha);
    if (count < 1)
        throw DomainError("count must be >= 1");
    const int d = spec.d();
    double best = 0.0;
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t start = h_dim(d, k - 1) + 1;
        if (start > count)
            break;
        const double n = static_cast<double>(std::min(h_dim(d, k), count));
        best = std::max(best, std::exp(spec.log_block_value(k) + a * std::pow(n, alpha)));
    }

    const ExponentialGauge closed = exact_gauge(spec);
    ExponentialGauge out{a, alpha, best, GaugeStatus::lower_bound};
    if (a <= closed.a && alpha <= closed.alpha) {
        // For n > count: s_n exp(a n^alpha) <= gamma^{-1/2} exp(a n^alpha - c n^{1/(d-1)}),
        // and the exponent is nonincreasing in n under these conditions.
        const double n1 = static_cast<double>(count + 1);
        const double tail = closed.value * std::exp(a * std::pow(n1, alpha) - closed.a * std::pow(n1, closed.alpha));
        if (tail <= best) {
            out.status = GaugeStatus::exact;
        } else if (a == closed.a && alpha == closed.alpha) {
            out.value = closed.value;
            out.status = GaugeStatus::exact;
        }
    }
    return out;
}

/// prod_k (x + a_k)^{1/d} - x, evaluated without cancellation.
inline double product_gap(std::span<const double> a, double x)
{
    if (a.empty())
        throw DomainError("product_gap needs a nonempty vector");
    if (!(x >= 0.0))
        throw DomainError("product_gap: x must be nonnegative");
    for (double ak : a)
        if (!(ak >= 0.0))
            throw DomainError("product_gap: entries must be nonnegative");
    const double d = static_cast<double>(a.size());
    if (x == 0.0) {
        double log_sum = 0.0;
        for (double ak : a) {
            if (ak == 0.0)
                return 0.0;
            log_sum += std::log(ak);
        }
        return std::exp(log_sum / d);
    }
    double s = 0.0;
    for (double ak : a)
        s += std::log1p(ak / x);
    return x * std::expm1(s / d);
}

/// sup_x product_gap(a, x) = lim_{x->inf} product_gap(a, x) = mean(a).
inline double product_gap_limit(std::span<const double> a)
{
    if (a.empty())
        throw DomainError("product_gap_limit needs a nonempty vector");
    for (double ak : a)
        if (!(ak >= 0.0))
            throw DomainError("product_gap_limit: entries must be nonnegative");
    return std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
}

} // namespace harmspec

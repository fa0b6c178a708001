#pragma once

// Exponential classes of sequences and operators.
//
// A sequence x belongs to the class of type (a, alpha) when
//
//     |x|_{a,alpha} = sup_n |x_n| exp(a n^alpha) < infinity,   n = 1, 2, ...
//
// and an operator belongs to the operator class when its singular value
// sequence does. The supremum is over all of N; a finite prefix only yields
// a lower bound, which is what GaugeStatus records.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"

namespace harmspec {

enum class GaugeStatus {
    exact,       ///< value is the true supremum over all n
    lower_bound, ///< supremum over a finite prefix only
    upper_bound  ///< value dominates the true gauge
};

struct ExponentialGauge {
    double a = 1.0;
    double alpha = 1.0;
    double value = 0.0; ///< may be +infinity
    GaugeStatus status = GaugeStatus::lower_bound;

    bool certified() const { return status == GaugeStatus::exact; }
};

namespace detail {

inline void require_class_parameters(double a, double alpha)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("rate a must be positive and finite");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("exponent alpha must be positive and finite");
}

} // namespace detail

/// Finite nonincreasing sequence of nonnegative reals (singular values or
/// eigenvalue moduli), indexed from n = 1.
class FiniteSpectrum {
public:
    FiniteSpectrum() = default;

    explicit FiniteSpectrum(std::vector<double> values, bool tail_certified = false)
        : values_(std::move(values)), tail_certified_(tail_certified)
    {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!(values_[i] >= 0.0))
                throw DomainError("spectrum entries must be nonnegative");
            if (i > 0 && values_[i] > values_[i - 1])
                throw DomainError("spectrum must be nonincreasing (index "
                                  + std::to_string(i + 1) + ")");
        }
    }

    /// Sorts |v| into nonincreasing order first.
    static FiniteSpectrum from_unsorted(std::vector<double> v, bool tail_certified = false)
    {
        for (double& x : v)
            x = std::abs(x);
        std::sort(v.begin(), v.end(), std::greater<>());
        return FiniteSpectrum(std::move(v), tail_certified);
    }

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    bool tail_certified() const { return tail_certified_; }

private:
    std::vector<double> values_;
    bool tail_certified_ = false;
};

/// sup over the stored prefix of x_n exp(a n^alpha). Exact only when the
/// spectrum's tail is certified.
inline ExponentialGauge sequence_gauge(const FiniteSpectrum& x, double a, double alpha)
{
    detail::require_class_parameters(a, alpha);
    double best = 0.0;
    const auto v = x.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0.0)
            continue;
        const double n = static_cast<double>(i + 1);
        // log-space keeps huge exponents from producing inf * 0 style trouble
        const double term = std::exp(std::log(v[i]) + a * std::pow(n, alpha));
        best = std::max(best, term);
    }
    return {a, alpha, best, x.tail_certified() ? GaugeStatus::exact : GaugeStatus::lower_bound};
}

/// |ABC|_{a,alpha} <= ||A|| |B|_{a,alpha} ||C||.
inline ExponentialGauge compose_gauge(double norm_left, const ExponentialGauge& mid, double norm_right)
{
    if (!(norm_left >= 0.0) || !(norm_right >= 0.0))
        throw DomainError("operator norms must be nonnegative");
    ExponentialGauge out = mid;
    if (norm_left == 0.0 || norm_right == 0.0) {
        out.value = 0.0;
    } else {
        out.value = norm_left * mid.value * norm_right;
    }
    if (out.status == GaugeStatus::exact)
        out.status = GaugeStatus::upper_bound;
    return out;
}

/// Rate of a sum of N operators with rates a_n: (sum a_n^{-1/alpha})^{-alpha}.
inline double sum_rate(std::span<const double> rates, double alpha)
{
    if (rates.empty())
        throw DomainError("sum_rate needs at least one rate");
    for (double a : rates)
        detail::require_class_parameters(a, alpha);

    // Factor out the smallest rate: a' = m (sum (m/a_n)^{1/alpha})^{-alpha}.
    // Summing the sorted ratios makes the result independent of input order.
    const double m = *std::min_element(rates.begin(), rates.end());
    std::vector<double> terms;
    terms.reserve(rates.size());
    for (double a : rates)
        terms.push_back(std::pow(m / a, 1.0 / alpha));
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms)
        s += t;
    return m * std::pow(s, -alpha);
}

/// Gauge of a sum: rate from sum_rate, value N * max of the summand gauges.
inline ExponentialGauge sum_gauge(std::span<const ExponentialGauge> gauges)
{
    if (gauges.empty())
        throw DomainError("sum_gauge needs at least one gauge");
    const double alpha = gauges.front().alpha;
    std::vector<double> rates;
    double vmax = 0.0;
    for (const auto& g : gauges) {
        if (g.alpha != alpha)
            throw MismatchError("sum_gauge: all gauges must share the same alpha");
        rates.push_back(g.a);
        vmax = std::max(vmax, g.value);
    }
    ExponentialGauge out;
    out.alpha = alpha;
    out.a = sum_rate(rates, alpha);
    out.value = static_cast<double>(gauges.size()) * vmax;
    out.status = gauges.size() == 1 ? gauges.front().status : GaugeStatus::upper_bound;
    return out;
}

/// Eigenvalues of an operator of class (a, alpha) lie in the sequence class
/// (a/(1+alpha), alpha) with gauge at most the operator's gauge.
inline ExponentialGauge eigen_rate_transfer(const ExponentialGauge& g)
{
    detail::require_class_parameters(g.a, g.alpha);
    ExponentialGauge out = g;
    out.a = g.a / (1.0 + g.alpha);
    out.status = GaugeStatus::upper_bound;
    return out;
}

struct InterleavedSpectra {
    FiniteSpectrum a;   ///< diag(s1, 0, s2, 0, ...) truncated to 2m
    FiniteSpectrum b;   ///< diag(0, s1, 0, s2, ...) truncated to 2m
    FiniteSpectrum sum; ///< diag(s1, s1, s2, s2, ...) truncated to 2m
};

/// Two operators with gauge 1 whose sum leaves the class, s_n = exp(-a n^alpha).
/// Returns singular values of the leading 2m x 2m blocks.
inline InterleavedSpectra interleave_counterexample(double a, double alpha, int m)
{
    detail::require_class_parameters(a, alpha);
    if (m < 1)
        throw DomainError("interleave_counterexample needs m >= 1");
    std::vector<double> single(2 * static_cast<std::size_t>(m), 0.0);
    std::vector<double> doubled;
    doubled.reserve(2 * static_cast<std::size_t>(m));
    for (int n = 1; n <= m; ++n) {
        const double s = std::exp(-a * std::pow(static_cast<double>(n), alpha));
        single[static_cast<std::size_t>(n - 1)] = s;
        doubled.push_back(s);
        doubled.push_back(s);
    }
    return {FiniteSpectrum(single), FiniteSpectrum(single), FiniteSpectrum(std::move(doubled))};
}

} // namespace harmspec

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace harmspec {

using Point = std::vector<double>;

inline double distance(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw MismatchError("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

/// Open ball B_{r,x}.
struct BallSpec {
    Point center;
    double radius = 1.0;

    BallSpec() = default;
    BallSpec(Point c, double r) : center(std::move(c)), radius(r)
    {
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw DomainError("ball radius must be positive and finite");
        if (center.empty())
            throw DomainError("ball centre must have at least one coordinate");
    }

    int dim() const { return static_cast<int>(center.size()); }

    /// B(gamma) = B_{gamma r, x}.
    BallSpec dilate(double gamma) const { return BallSpec(center, gamma * radius); }

    /// Membership in the open ball, widened by a relative slack.
    bool contains(std::span<const double> p, double rel_slack = 0.0) const
    {
        return distance(p, center) < radius * (1.0 + rel_slack);
    }

    /// Closure of this ball lies in the closure of `outer` (touching allowed).
    bool inside(const BallSpec& outer, double rel_slack = 1e-12) const
    {
        return distance(center, outer.center) + radius <= outer.radius * (1.0 + rel_slack);
    }
};

inline bool same_center(const BallSpec& a, const BallSpec& b, double tol = 1e-14)
{
    return a.dim() == b.dim() && distance(a.center, b.center) <= tol * std::max(1.0, a.radius);
}

/// Open union of finitely many balls.
struct DomainUnion {
    std::vector<BallSpec> balls;

    DomainUnion() = default;
    explicit DomainUnion(std::vector<BallSpec> b) : balls(std::move(b))
    {
        if (balls.empty())
            throw DomainError("domain union needs at least one ball");
        const int d = balls.front().dim();
        for (const auto& ball : balls)
            if (ball.dim() != d)
                throw MismatchError("domain union: balls of different dimension");
    }

    int dim() const { return balls.empty() ? 0 : balls.front().dim(); }

    bool contains(std::span<const double> p, double rel_slack = 0.0) const
    {
        return std::any_of(balls.begin(), balls.end(),
                           [&](const BallSpec& b) { return b.contains(p, rel_slack); });
    }

    /// Index of the lowest-index ball containing p, or -1. This is the
    /// disjointification used for integration: piece n is
    /// ball n minus the balls before it.
    int owner(std::span<const double> p) const
    {
        for (std::size_t i = 0; i < balls.size(); ++i)
            if (balls[i].contains(p))
                return static_cast<int>(i);
        return -1;
    }

    /// Lower bound on dist(p, complement): the best single-ball clearance.
    double clearance(std::span<const double> p) const
    {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& b : balls)
            best = std::max(best, b.radius - distance(p, b.center));
        return best;
    }
};

/// Radical-inverse (Halton) sequence; low discrepancy and fully deterministic.
class HaltonSequence {
public:
    explicit HaltonSequence(int dim, std::uint64_t start = 0) : dim_(dim), index_(start + 1)
    {
        static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        if (dim < 1 || dim > 12)
            throw DomainError("Halton sequence supports 1..12 dimensions");
        bases_.assign(primes, primes + dim);
    }

    /// Next point in [0,1)^dim.
    Point next()
    {
        Point p(static_cast<std::size_t>(dim_));
        for (int j = 0; j < dim_; ++j)
            p[static_cast<std::size_t>(j)] = radical_inverse(index_, bases_[static_cast<std::size_t>(j)]);
        ++index_;
        return p;
    }

private:
    static double radical_inverse(std::uint64_t i, int base)
    {
        double f = 1.0, r = 0.0;
        while (i > 0) {
            f /= base;
            r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
            i /= static_cast<std::uint64_t>(base);
        }
        return r;
    }

    int dim_;
    std::uint64_t index_;
    std::vector<int> bases_;
};

/// `count` deterministic points inside `ball` (rejection from the bounding cube).
inline std::vector<Point> sample_ball(const BallSpec& ball, std::size_t count, std::uint64_t seed = 0)
{
    HaltonSequence halton(ball.dim(), seed);
    std::vector<Point> out;
    out.reserve(count);
    while (out.size() < count) {
        Point u = halton.next();
        double r2 = 0.0;
        for (double& c : u) {
            c = 2.0 * c - 1.0;
            r2 += c * c;
        }
        if (r2 >= 1.0)
            continue;
        for (std::size_t j = 0; j < u.size(); ++j)
            u[j] = ball.center[j] + ball.radius * u[j];
        out.push_back(std::move(u));
    }
    return out;
}

/// Deterministic points on the sphere bounding `ball` (normalised Halton
/// points of the cube shell; adequate for containment probing).
inline std::vector<Point> sample_sphere(const BallSpec& ball, std::size_t count, std::uint64_t seed = 0)
{
    HaltonSequence halton(ball.dim(), seed);
    std::vector<Point> out;
    out.reserve(count);
    while (out.size() < count) {
        Point u = halton.next();
        double r2 = 0.0;
        for (double& c : u) {
            c = 2.0 * c - 1.0;
            r2 += c * c;
        }
        if (r2 >= 1.0 || r2 < 1e-4)
            continue;
        const double r = std::sqrt(r2);
        for (std::size_t j = 0; j < u.size(); ++j)
            u[j] = ball.center[j] + ball.radius * u[j] / r;
        out.push_back(std::move(u));
    }
    return out;
}

} // namespace harmspec

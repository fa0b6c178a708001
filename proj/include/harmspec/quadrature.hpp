#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"

namespace harmspec {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on the three-term recurrence).
inline GaussRule gauss_legendre(int n)
{
    if (n < 1)
        throw DomainError("gauss_legendre: need at least one node");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1)
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

/// Weighted point set approximating integration over a region.
struct PointRule {
    std::vector<Point> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
};

/// Tensor polar rule on a ball.
///   d = 2: Gauss-Legendre in r (Jacobian r) x trapezoid in theta.
///   d = 3: Gauss-Legendre in r (Jacobian r^2) x Gauss-Legendre in cos(theta)
///          x trapezoid in the azimuth.
/// Exact for polynomials of degree <= min(2*radial - 2, angular - 1) (d = 2).
inline PointRule ball_rule(const BallSpec& ball, int radial, int angular)
{
    const int d = ball.dim();
    if (d != 2 && d != 3)
        throw DomainError("ball quadrature is implemented for d = 2 and d = 3 only");
    if (radial < 1 || angular < 1)
        throw DomainError("quadrature orders must be positive");
    const GaussRule gr = gauss_legendre(radial);
    const double R = ball.radius;
    PointRule out;
    const double dphi = 2.0 * M_PI / angular;
    if (d == 2) {
        out.points.reserve(static_cast<std::size_t>(radial * angular));
        for (int i = 0; i < radial; ++i) {
            const double r = 0.5 * R * (gr.nodes[static_cast<std::size_t>(i)] + 1.0);
            const double wr = 0.5 * R * gr.weights[static_cast<std::size_t>(i)] * r;
            for (int j = 0; j < angular; ++j) {
                const double t = dphi * j;
                out.points.push_back({ball.center[0] + r * std::cos(t), ball.center[1] + r * std::sin(t)});
                out.weights.push_back(wr * dphi);
            }
        }
    } else {
        const int polar = angular / 2 + 1;
        const GaussRule gu = gauss_legendre(polar);
        for (int i = 0; i < radial; ++i) {
            const double r = 0.5 * R * (gr.nodes[static_cast<std::size_t>(i)] + 1.0);
            const double wr = 0.5 * R * gr.weights[static_cast<std::size_t>(i)] * r * r;
            for (int p = 0; p < polar; ++p) {
                const double u = gu.nodes[static_cast<std::size_t>(p)];
                const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
                const double wu = gu.weights[static_cast<std::size_t>(p)];
                for (int j = 0; j < angular; ++j) {
                    const double t = dphi * j;
                    out.points.push_back({ball.center[0] + r * s * std::cos(t),
                                          ball.center[1] + r * s * std::sin(t),
                                          ball.center[2] + r * u});
                    out.weights.push_back(wr * wu * dphi);
                }
            }
        }
    }
    return out;
}

/// Rule on a ball union split into disjoint pieces: a node of ball j is kept
/// only when no earlier ball contains it.
inline PointRule union_rule(const DomainUnion& domain, int radial, int angular)
{
    PointRule out;
    for (std::size_t j = 0; j < domain.balls.size(); ++j) {
        PointRule piece = ball_rule(domain.balls[j], radial, angular);
        for (std::size_t q = 0; q < piece.size(); ++q) {
            bool earlier = false;
            for (std::size_t i = 0; i < j && !earlier; ++i)
                earlier = domain.balls[i].contains(piece.points[q]);
            if (earlier)
                continue;
            out.points.push_back(std::move(piece.points[q]));
            out.weights.push_back(piece.weights[q]);
        }
    }
    return out;
}

} // namespace harmspec

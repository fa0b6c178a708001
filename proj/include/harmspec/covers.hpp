#pragma once

// Relative covers of a nested pair (outer, inner) and the singular-value /
// eigenvalue bounds they induce.
//
// A relative cover is a list of balls B_j with scalings gamma_j > 1 such that
//   (a) inner  is covered by the union of the B_j, and
//   (b) every  B_j(gamma_j) lies in outer.
// Its efficiency is Gamma = (log gamma_1, ..., log gamma_N) with
//   ||Gamma||   = min_j |log gamma_j|
//   ||Gamma||_k = (sum_j |log gamma_j|^{-k})^{-1/k}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ball_embedding.hpp"
#include "error.hpp"
#include "expo_classes.hpp"
#include "geometry.hpp"

namespace harmspec {

struct RelativeCover {
    std::vector<BallSpec> balls;
    std::vector<double> scalings;
    DomainUnion outer;
    DomainUnion inner;

    std::size_t size() const { return balls.size(); }
};

struct Efficiency {
    std::vector<double> gamma_logs;
    double norm_min = 0.0;
    int k = 1;
    double norm_k = 0.0;
};

/// ||Gamma||_k with the smallest entry factored out, so the N = 1 case returns
/// |log gamma| exactly and tiny or numerous entries cannot underflow.
inline double efficiency_norm(const std::vector<double>& logs, int k)
{
    if (logs.empty())
        throw DomainError("efficiency: empty cover");
    if (k < 1)
        throw DomainError("efficiency: k must be >= 1");
    double m = std::numeric_limits<double>::infinity();
    for (double l : logs)
        m = std::min(m, std::abs(l));
    std::vector<double> terms;
    terms.reserve(logs.size());
    for (double l : logs)
        terms.push_back(std::pow(m / std::abs(l), k));
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms)
        s += t;
    return m * std::pow(s, -1.0 / k);
}

inline Efficiency efficiency(const RelativeCover& cover, int k)
{
    if (cover.scalings.empty() || cover.scalings.size() != cover.balls.size())
        throw DomainError("efficiency: cover needs one scaling per ball and at least one ball");
    Efficiency e;
    e.k = k;
    for (double g : cover.scalings) {
        if (!(g > 1.0) || !std::isfinite(g))
            throw DomainError("efficiency: every scaling must be > 1");
        e.gamma_logs.push_back(std::log(g));
    }
    e.norm_min = std::abs(e.gamma_logs.front());
    for (double l : e.gamma_logs)
        e.norm_min = std::min(e.norm_min, std::abs(l));
    e.norm_k = efficiency_norm(e.gamma_logs, k);
    return e;
}

struct CoverViolation {
    char condition = 'a'; ///< 'a': inner not covered, 'b': dilated ball leaves outer
    std::size_t ball = 0; ///< offending cover ball (condition b) or inner ball (condition a)
    Point witness;
};

struct CoverReport {
    bool valid = true;
    std::vector<CoverViolation> violations;
    std::size_t samples_checked = 0;
};

/// Condition (a) by deterministic sampling of the inner union; condition (b)
/// analytically when a dilated ball fits in a single outer ball, otherwise by
/// sampling the dilated ball and its boundary.
inline CoverReport validate_cover(const RelativeCover& cover, std::size_t samples_per_ball = 4096,
                                  std::uint64_t seed = 0)
{
    CoverReport rep;
    if (cover.balls.empty() || cover.balls.size() != cover.scalings.size()) {
        rep.valid = false;
        return rep;
    }
    const DomainUnion cover_union(cover.balls);

    for (std::size_t i = 0; i < cover.inner.balls.size(); ++i) {
        for (const Point& p : sample_ball(cover.inner.balls[i], samples_per_ball, seed)) {
            ++rep.samples_checked;
            if (!cover_union.contains(p, 1e-12)) {
                rep.violations.push_back({'a', i, p});
                break;
            }
        }
        // boundary points of the inner ball belong to its closure only; probe just inside
        const BallSpec shrunk(cover.inner.balls[i].center, cover.inner.balls[i].radius * (1.0 - 1e-9));
        for (const Point& p : sample_sphere(shrunk, samples_per_ball / 4 + 1, seed)) {
            ++rep.samples_checked;
            if (!cover_union.contains(p, 1e-12)) {
                rep.violations.push_back({'a', i, p});
                break;
            }
        }
    }

    for (std::size_t j = 0; j < cover.balls.size(); ++j) {
        const BallSpec big = cover.balls[j].dilate(cover.scalings[j]);
        const bool analytic = std::any_of(cover.outer.balls.begin(), cover.outer.balls.end(),
                                          [&](const BallSpec& o) { return big.inside(o); });
        if (analytic)
            continue;
        bool ok = true;
        const BallSpec probe(big.center, big.radius * (1.0 - 1e-9));
        for (const Point& p : sample_sphere(probe, samples_per_ball, seed)) {
            ++rep.samples_checked;
            if (!cover.outer.contains(p)) {
                rep.violations.push_back({'b', j, p});
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        for (const Point& p : sample_ball(big, samples_per_ball, seed)) {
            ++rep.samples_checked;
            if (!cover.outer.contains(p)) {
                rep.violations.push_back({'b', j, p});
                break;
            }
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

struct EmbeddingBound {
    DecayBound bound;       ///< s_n(J) <= bound(n)
    ExponentialGauge gauge; ///< (c, 1/(d-1), N exp(-||Gamma||/2)), an upper bound
    Efficiency efficiency;
};

/// Singular values of J : h^2(outer) -> h^2(inner) for a cover of size N:
///     c = ((d-1)!/2)^{1/(d-1)} ||Gamma||_{d-1},   |J|_{c,1/(d-1)} <= N exp(-||Gamma||/2).
inline EmbeddingBound embedding_bound(const RelativeCover& cover, int d)
{
    detail::require_dimension(d);
    EmbeddingBound out;
    out.efficiency = efficiency(cover, d - 1);
    const double c = block_rate_factor(d) * out.efficiency.norm_k;
    const double value = static_cast<double>(cover.size()) * std::exp(-0.5 * out.efficiency.norm_min);
    out.gauge = {c, 1.0 / (d - 1), value, GaugeStatus::upper_bound};
    out.bound = {value, c, 1.0 / (d - 1)};
    return out;
}

/// Eigenvalue bound for an operator with constant K relative to the pair:
///     |lambda_n| <= K N exp(-||Gamma||/2) exp(-c n^{1/(d-1)}),
///     c = (d-1)/d ((d-1)!/2)^{1/(d-1)} ||Gamma||_{d-1}.
inline DecayBound eigenvalue_bound(const RelativeCover& cover, int d, double K)
{
    if (!(K >= 0.0) || !std::isfinite(K))
        throw DomainError("eigenvalue_bound: K must be nonnegative and finite");
    detail::require_dimension(d);
    const Efficiency e = efficiency(cover, d - 1);
    const double c = (static_cast<double>(d - 1) / d) * block_rate_factor(d) * e.norm_k;
    const double prefactor = K * static_cast<double>(cover.size()) * std::exp(-0.5 * e.norm_min);
    return {prefactor, c, 1.0 / (d - 1)};
}

/// Largest gamma with B(gamma) inside one of the outer balls (0 if the ball
/// itself does not fit anywhere).
inline double max_scaling(const BallSpec& ball, const DomainUnion& outer)
{
    double best = 0.0;
    for (const auto& o : outer.balls)
        best = std::max(best, (o.radius - distance(ball.center, o.center)) / ball.radius);
    return best;
}

/// Cover made of the inner balls themselves, each dilated as far as an outer
/// ball allows (times `shrink`).
inline RelativeCover self_cover(const DomainUnion& outer, const DomainUnion& inner, double shrink = 1.0)
{
    RelativeCover cover;
    cover.outer = outer;
    cover.inner = inner;
    for (const auto& b : inner.balls) {
        const double g = max_scaling(b, outer) * shrink;
        if (!(g > 1.0))
            throw GeometryError("self_cover: inner ball cannot be dilated inside the outer domain");
        cover.balls.push_back(b);
        cover.scalings.push_back(g);
    }
    return cover;
}

struct GreedyOptions {
    double ball_radius = 1.0;
    double grid_step = 0.5;
    std::size_t samples_per_ball = 2048;
    std::uint64_t seed = 0;
    double shrink = 0.99;
};

/// Heuristic cover: candidate balls of a fixed radius on a grid anchored at
/// the inner bounding-box centre, scaled by their clearance to the outer
/// boundary, chosen greedily to cover sampled inner points.
inline RelativeCover greedy_cover(const DomainUnion& outer, const DomainUnion& inner, const GreedyOptions& opt)
{
    if (!(opt.ball_radius > 0.0) || !(opt.grid_step > 0.0))
        throw DomainError("greedy_cover: radius and step must be positive");
    if (outer.dim() != inner.dim())
        throw MismatchError("greedy_cover: dimension mismatch");
    const int d = inner.dim();

    std::vector<Point> pts;
    for (const auto& b : inner.balls) {
        auto s = sample_ball(b, opt.samples_per_ball, opt.seed);
        pts.insert(pts.end(), s.begin(), s.end());
        // near-boundary points matter most for coverage
        auto t = sample_sphere(BallSpec(b.center, b.radius * (1.0 - 1e-9)), opt.samples_per_ball / 4 + 1, opt.seed);
        pts.insert(pts.end(), t.begin(), t.end());
    }
    for (const Point& p : pts)
        if (!(outer.clearance(p) > 0.0))
            throw GeometryError("greedy_cover: inner domain is not compactly contained in outer");

    Point lo(static_cast<std::size_t>(d), std::numeric_limits<double>::infinity());
    Point hi(static_cast<std::size_t>(d), -std::numeric_limits<double>::infinity());
    for (const auto& b : inner.balls)
        for (int j = 0; j < d; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            lo[uj] = std::min(lo[uj], b.center[uj] - b.radius);
            hi[uj] = std::max(hi[uj], b.center[uj] + b.radius);
        }

    // grid points within ball_radius of the bounding box
    std::vector<std::vector<double>> axes(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        const double mid = 0.5 * (lo[uj] + hi[uj]);
        const double half = 0.5 * (hi[uj] - lo[uj]) + opt.ball_radius;
        const int steps = static_cast<int>(std::floor(half / opt.grid_step));
        for (int s = -steps; s <= steps; ++s)
            axes[uj].push_back(mid + s * opt.grid_step);
    }
    std::vector<BallSpec> candidates;
    std::vector<double> cand_gamma;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    for (;;) {
        Point c(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            c[static_cast<std::size_t>(j)] = axes[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
        const double g = outer.clearance(c) / opt.ball_radius * opt.shrink;
        if (g > 1.0) {
            candidates.emplace_back(c, opt.ball_radius);
            cand_gamma.push_back(g);
        }
        int j = 0;
        for (; j < d; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            if (++idx[uj] < axes[uj].size())
                break;
            idx[uj] = 0;
        }
        if (j == d)
            break;
    }

    std::vector<bool> covered(pts.size(), false);
    std::size_t remaining = pts.size();
    std::vector<bool> used(candidates.size(), false);
    RelativeCover cover;
    cover.outer = outer;
    cover.inner = inner;
    while (remaining > 0) {
        std::size_t best = candidates.size();
        std::size_t best_count = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (used[c])
                continue;
            std::size_t cnt = 0;
            for (std::size_t p = 0; p < pts.size(); ++p)
                if (!covered[p] && candidates[c].contains(pts[p]))
                    ++cnt;
            if (cnt > best_count || (cnt == best_count && cnt > 0 && cand_gamma[c] > cand_gamma[best])) {
                best = c;
                best_count = cnt;
            }
        }
        if (best == candidates.size() || best_count == 0)
            throw GeometryError("greedy_cover: infeasible, " + std::to_string(remaining)
                                + " inner sample points cannot be covered by a ball with gamma > 1");
        used[best] = true;
        for (std::size_t p = 0; p < pts.size(); ++p)
            if (!covered[p] && candidates[best].contains(pts[p])) {
                covered[p] = true;
                --remaining;
            }
        cover.balls.push_back(candidates[best]);
        cover.scalings.push_back(cand_gamma[best]);
    }
    return cover;
}

} // namespace harmspec

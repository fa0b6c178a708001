// Acceptance suite: prints one PASS/FAIL line per criterion, details indented
// below it. Exit status is nonzero when any criterion fails.

#include <harmspec/ball_embedding.hpp>
#include <harmspec/composition.hpp>
#include <harmspec/covers.hpp>
#include <harmspec/expo_classes.hpp>
#include <harmspec/geometry_json.hpp>
#include <harmspec/harmonic_numerics.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace harmspec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void note(const std::string& s) { details.push_back(s); }
    void require(bool cond, const std::string& s)
    {
        pass = pass && cond;
        details.push_back(std::string(cond ? "ok   " : "FAIL ") + s);
    }
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome criterion_1()
{
    Outcome o;
    struct Case {
        int d;
        double gamma;
        int kmax;
    };
    for (const Case c : {Case{2, 1.5, 6}, Case{2, 3.0, 6}, Case{3, 2.0, 4}}) {
        const auto t0 = Clock::now();
        QuadratureScheme q;
        q.exact_concentric = false; // numerical Gram matrix, not the closed form
        const Prop34Report rep = verify_prop34(c.d, c.gamma, c.kmax, 1e-8, q);
        const double t = seconds_since(t0);
        o.require(rep.pass && t < 60.0,
                  fmt("d=%d gamma=%g kmax=%d: n<=%zu max rel err %.3e, %.2f s", c.d, c.gamma, c.kmax,
                      rep.singular_values.size(), rep.max_rel_error, t));
    }
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    for (int d = 2; d <= 4; ++d)
        for (double gamma : {1.1, 2.0, 10.0}) {
            const ExactBallSpectrum s(d, gamma);
            const ExponentialGauge g = exact_gauge(s);
            const double target = 1.0 / std::sqrt(gamma);
            const std::int64_t nmax = h_dim(d, 50);
            double sup = 0.0;
            std::int64_t exceed = 0;
            for (std::int64_t n = 1; n <= nmax; ++n) {
                const double v = s(n) * std::exp(g.a * std::pow(static_cast<double>(n), g.alpha));
                sup = std::max(sup, v);
                if (v > target + 1e-12)
                    ++exceed;
            }
            o.require(std::abs(sup - target) <= 1e-12 && exceed == 0,
                      fmt("d=%d gamma=%g: sup %.15g vs gamma^-1/2 %.15g (diff %.2e), %lld exceed", d, gamma, sup,
                          target, sup - target, static_cast<long long>(exceed)));
        }
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    const int k = 200;
    for (int d = 2; d <= 4; ++d)
        for (double gamma : {1.1, 2.0, 10.0}) {
            const ExactBallSpectrum s(d, gamma);
            const std::int64_t n = h_dim(d, k);
            const double log_s = s.log_block_value(k);
            const double logn = std::log(static_cast<double>(n));
            const double e1 = std::log(std::abs(log_s)) / logn;
            const double want1 = 1.0 / (d - 1);
            const double e2 = log_s / std::pow(static_cast<double>(n), 1.0 / (d - 1));
            const double want2 = asymptotic_log_rate(s);
            const double r1 = std::abs(e1 / want1 - 1.0), r2 = std::abs(e2 / want2 - 1.0);
            o.require(r1 <= 0.02, fmt("d=%d gamma=%g n=h_d(%d)=%lld: log|log s|/log n = %.5f vs %.5f (%.2f%%)", d,
                                      gamma, k, static_cast<long long>(n), e1, want1, 100 * r1));
            o.require(r2 <= 0.01, fmt("d=%d gamma=%g: log s/n^(1/(d-1)) = %.6f vs %.6f (%.3f%%)", d, gamma, e2,
                                      want2, 100 * r2));
        }
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> len(2, 6);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    int monotone = 0, limit_ok = 0;
    double worst_limit = 0.0;
    for (int t = 0; t < 100; ++t) {
        std::vector<double> a(static_cast<std::size_t>(len(rng)));
        for (double& x : a)
            x = u(rng);
        bool mono = true;
        double prev = product_gap(a, 0.0);
        for (int i = 0; i <= 240; ++i) {
            const double x = std::pow(10.0, -6.0 + 0.05 * i);
            const double v = product_gap(a, x);
            mono = mono && v >= prev;
            prev = v;
        }
        monotone += mono;
        const double diff = std::abs(product_gap(a, 1e6) - product_gap_limit(a));
        worst_limit = std::max(worst_limit, diff);
        limit_ok += diff <= 1e-4;
    }
    o.require(monotone == 100, fmt("%d/100 vectors nondecreasing on 241-point grid 1e-6..1e6", monotone));
    o.require(limit_ok == 100, fmt("%d/100 within 1e-4 of the mean at x=1e6 (worst %.2e)", limit_ok, worst_limit));
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    bool exact = true;
    for (double alpha : {0.25, 0.5, 1.0, 1.5, 3.0})
        for (double a : {0.3, 1.0, 7.0}) {
            const double r[] = {a, a};
            exact = exact && sum_rate(r, alpha) == std::pow(2.0, -alpha) * a;
        }
    o.require(exact, "sum_rate((a,a),alpha) == 2^-alpha a bitwise on a 5x3 grid");
    for (int m : {20, 40, 80}) {
        const auto sp = interleave_counterexample(1.0, 1.0, m);
        const double low = sequence_gauge(sp.sum, 0.5, 1.0).value;
        const double high = sequence_gauge(sp.sum, 1.0, 1.0).value;
        o.require(low <= 1.0 && high > 1e3,
                  fmt("m=%d: gauge at (a/2,1) = %.17g, at (a,1) = %.3e", m, low, high));
    }
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    bool single = true;
    for (int d = 2; d <= 6; ++d)
        for (double gamma : {1.1, 2.0, 10.0}) {
            const Point c(static_cast<std::size_t>(d), 0.0);
            const RelativeCover cover{{BallSpec(c, 1.0)}, {gamma}, DomainUnion({BallSpec(c, gamma)}),
                                      DomainUnion({BallSpec(c, 1.0)})};
            const auto eb = embedding_bound(cover, d);
            const auto ex = exact_gauge(ExactBallSpectrum(d, gamma));
            single = single && eb.gauge.a == ex.a && eb.gauge.alpha == ex.alpha && eb.gauge.value == ex.value;
        }
    o.require(single, "single-ball covers: rate, exponent and gauge equal the closed form bitwise (d=2..6)");

    const auto t0 = Clock::now();
    const Geometry geo = load_geometry(std::string(HARMSPEC_DATA_DIR) + "/two_balls.json");
    const RelativeCover cover = self_cover(geo.outer, geo.inner);
    const auto rep = validate_cover(cover);
    o.require(rep.valid, fmt("two_balls.json: cover of %zu balls valid, scalings %.4g %.4g", cover.size(),
                             cover.scalings[0], cover.scalings[1]));
    const int kmax = 20;
    const auto basis = orthonormal_basis(geo.outer.balls.front(), kmax);
    const auto emb = embedding_matrix(basis, geo.inner);
    const auto eb = embedding_bound(cover, 2);
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t worst = 0;
    for (std::size_t n = 0; n < emb.singular_values.size(); ++n) {
        const double slack = eb.bound(static_cast<double>(n + 1)) - emb.singular_values[n];
        if (slack < min_slack) {
            min_slack = slack;
            worst = n + 1;
        }
    }
    const double t = seconds_since(t0);
    o.require(min_slack >= 0.0 && t < 120.0,
              fmt("kmax=%d, %zu singular values: min slack %.3e at n=%zu, s_1 = %.6f, %.2f s", kmax,
                  emb.singular_values.size(), min_slack, worst, emb.singular_values.front(), t));
    return o;
}

Outcome criterion_7()
{
    Outcome o;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dim(2, 6), count(1, 5);
    std::uniform_real_distribution<double> g(1.05, 8.0);
    int exact = 0, within = 0;
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const int d = dim(rng);
        RelativeCover cover;
        const int N = count(rng);
        for (int j = 0; j < N; ++j) {
            cover.balls.emplace_back(Point(static_cast<std::size_t>(d), 0.0), 1.0);
            cover.scalings.push_back(g(rng));
        }
        const auto eb = embedding_bound(cover, d);
        const double transferred = eigen_rate_transfer(eb.gauge).a;
        const double direct = eigenvalue_bound(cover, d, 1.0).rate;
        const double ulps = std::abs(transferred - direct) / (std::numeric_limits<double>::epsilon() * direct);
        worst = std::max(worst, ulps);
        exact += transferred == direct;
        within += ulps <= 4.0;
    }
    o.require(within == 20, fmt("20 random (d, cover): %d bitwise equal, all within %.1f ulp", exact, worst));
    return o;
}

Outcome criterion_8()
{
    Outcome o;
    const auto t0 = Clock::now();
    const double gamma = 1.9;
    const int kmax = 25;
    const ConformalMap phi = halfplane_example_map();
    const BallSpec disc({0.0, 2.0}, gamma);
    const BallSpec unit({0.0, 2.0}, 1.0);
    const ConvergedSpectrum cs = converged_eigenvalues(phi, disc, kmax);
    const double K = estimate_K(phi, DomainUnion({unit}), DomainUnion({disc}));
    const RelativeCover cover{{unit}, {gamma}, DomainUnion({disc}), DomainUnion({unit})};
    const DecayBound bound = eigenvalue_bound(cover, 2, K);
    std::vector<bool> conv(cs.converged.begin(), cs.converged.end());
    std::unique_ptr<bool[]> flags(new bool[conv.size()]);
    int n_conv = 0;
    for (std::size_t i = 0; i < conv.size(); ++i) {
        flags[i] = conv[i];
        n_conv += conv[i];
    }
    const DecayReport rep = decay_report(cs.eigenvalues, bound, std::span<const bool>(flags.get(), conv.size()));
    const double t = seconds_since(t0);
    o.note(fmt("K = %.6g, prefactor K exp(-log(gamma)/2) = %.6g, rate = %.6g", K, bound.prefactor, bound.rate));
    o.note(fmt("%d of %zu eigenvalues converged; |lambda_2| = %.6g", n_conv, cs.eigenvalues.size(),
               std::abs(cs.eigenvalues[1])));
    o.require(std::abs(bound.rate - std::log(gamma) / 4.0) < 1e-15 && std::abs(bound.prefactor - K / std::sqrt(gamma)) < 1e-12,
              "bound is K exp(-(log gamma)/2) exp(-(log gamma) n/4)");
    o.require(rep.violations == 0 && n_conv > 0, fmt("%d violations among converged eigenvalues", rep.violations));
    const double ref = std::pow(gamma, -0.25) * 1.05;
    o.require(rep.fitted_ratio <= ref, fmt("fitted ratio %.6f <= gamma^(-1/4) * 1.05 = %.6f", rep.fitted_ratio, ref));
    o.require(t < 300.0, fmt("runtime %.2f s", t));
    return o;
}

Outcome criterion_9()
{
    Outcome o;
    const int kmax = 20;
    const auto ev = galerkin_eigenvalues(galerkin_matrix(scaling_map(0.5), BallSpec({0.0, 0.0}, 1.0), kmax));
    double worst = 0.0;
    std::size_t count = 0;
    for (int k = 0; k <= kmax - 2; ++k) {
        const double want = std::pow(0.5, k);
        const std::vector<int> idx = k == 0 ? std::vector<int>{0} : std::vector<int>{2 * k - 1, 2 * k};
        for (int i : idx) {
            worst = std::max(worst, std::abs(ev[static_cast<std::size_t>(i)] - want));
            ++count;
        }
    }
    o.require(worst <= 1e-8, fmt("kmax=%d: %zu eigenvalues of degree <= %d, max abs error %.3e", kmax, count,
                                 kmax - 2, worst));
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact concentric spectrum from numerical Gram matrices", criterion_1},
        {"closed-form gauge attained and never exceeded", criterion_2},
        {"stretched-exponential asymptotics", criterion_3},
        {"product gap monotone with mean as limit", criterion_4},
        {"sum rate and interleave counterexample", criterion_5},
        {"cover bound: single-ball consistency and two-ball union", criterion_6},
        {"eigenvalue rate equals transferred embedding rate", criterion_7},
        {"half-plane composition operator decay", criterion_8},
        {"scaling map spectrum", criterion_9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note(std::string("exception: ") + e.what());
        }
        std::printf("%s %zu %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
        for (const auto& d : o.details)
            std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

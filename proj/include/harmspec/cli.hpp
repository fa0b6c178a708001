#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// it can be driven from tests.
//
// Exit status: 0 success, 1 validation failure (bound violated, cover invalid,
// verification outside tolerance, numerical failure), 2 usage error.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ball_embedding.hpp"
#include "composition.hpp"
#include "covers.hpp"
#include "dims.hpp"
#include "error.hpp"
#include "expo_classes.hpp"
#include "geometry_json.hpp"
#include "harmonic_numerics.hpp"

namespace harmspec::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, validation_failure = 1, usage_error = 2 };

/// Shortest representation that round-trips.
inline std::string format_double(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// JSON has no infinities; they are written as strings.
inline json number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

struct RunConfig {
    std::string subcommand;
    int d = 2;
    double gamma = 2.0;
    std::int64_t kmax = 4;
    std::int64_t count = 10;
    double K = 1.0;
    double tol = 1e-8;
    double conv_tol = 1e-6;
    double quad_tol = 1e-10;
    std::uint64_t seed = 0;
    int samples = 20000;
    std::string geometry;
    std::string input;
    std::string output;
    std::string summary;
    std::string format = "csv";
    // gauge
    double a = 1.0;
    double alpha = 1.0;
    std::optional<int> exact_d;
    std::optional<double> exact_gamma;
    // cover-bound
    bool greedy = false;
    double radius = 1.0;
    double step = 0.5;
    // verify-embedding
    bool exact_moments = false;
    // compose
    std::string map = "scaling";
    double rho = 0.5;
    std::vector<double> coeffs;
    std::optional<double> K_override;
};

namespace detail {

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output.empty() || cfg.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f)
        throw DomainError("cannot open output file: " + cfg.output);
    f << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline int run_dims(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.kmax < 0)
        throw DomainError("--kmax must be >= 0");
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::int64_t k = 0; k <= cfg.kmax; ++k)
            rows.push_back({{"k", k}, {"N_d", n_dim(cfg.d, k)}, {"h_d", h_dim(cfg.d, k)}});
        emit(cfg, dump({{"d", cfg.d}, {"rows", rows}}), out);
    } else {
        std::ostringstream s;
        s << "k,N_d,h_d\n";
        for (std::int64_t k = 0; k <= cfg.kmax; ++k)
            s << k << ',' << n_dim(cfg.d, k) << ',' << h_dim(cfg.d, k) << '\n';
        emit(cfg, s.str(), out);
    }
    return ok;
}

inline json singvals_summary(const ExactBallSpectrum& spec)
{
    const auto g = exact_gauge(spec);
    return {{"d", spec.d()},       {"gamma", spec.gamma()}, {"c", g.a},
            {"alpha", g.alpha},    {"gauge", g.value},      {"log_rate", asymptotic_log_rate(spec)}};
}

inline int run_singvals(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.count < 1)
        throw DomainError("--count must be >= 1");
    const ExactBallSpectrum spec(cfg.d, cfg.gamma);
    json summary = singvals_summary(spec);
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::int64_t n = 1; n <= cfg.count; ++n)
            rows.push_back({{"n", n}, {"k", degree_of_index(cfg.d, n)}, {"s_n", exact_singular_value(spec, n)}});
        summary["rows"] = rows;
        emit(cfg, dump(summary), out);
    } else {
        std::ostringstream s;
        s << "n,k,s_n\n";
        for (std::int64_t n = 1; n <= cfg.count; ++n)
            s << n << ',' << degree_of_index(cfg.d, n) << ',' << format_double(exact_singular_value(spec, n)) << '\n';
        emit(cfg, s.str(), out);
        if (!cfg.summary.empty()) {
            std::ofstream f(cfg.summary, std::ios::binary);
            if (!f)
                throw DomainError("cannot open summary file: " + cfg.summary);
            f << dump(summary);
        }
    }
    return ok;
}

/// One value per line; blank lines and a non-numeric header line are skipped.
inline FiniteSpectrum read_spectrum_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open spectrum file: " + path);
    std::vector<double> v;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto comma = line.find(',');
        std::string field = comma == std::string::npos ? line : line.substr(0, comma);
        field.erase(0, field.find_first_not_of(" \t"));
        field.erase(field.find_last_not_of(" \t") + 1);
        if (field.empty())
            continue;
        double x;
        auto res = std::from_chars(field.data(), field.data() + field.size(), x);
        if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
            if (first) {
                first = false;
                continue;
            }
            throw DomainError("spectrum file " + path + ": cannot parse '" + field + "'");
        }
        first = false;
        v.push_back(x);
    }
    return FiniteSpectrum::from_unsorted(std::move(v));
}

inline int run_gauge(const RunConfig& cfg, std::ostream& out)
{
    ExponentialGauge g;
    if (cfg.exact_d || cfg.exact_gamma) {
        if (!cfg.exact_d || !cfg.exact_gamma)
            throw DomainError("--exact-d and --exact-gamma must be given together");
        if (!cfg.input.empty())
            throw DomainError("--input cannot be combined with an exact spectrum");
        const ExactBallSpectrum spec(*cfg.exact_d, *cfg.exact_gamma);
        g = exact_prefix_gauge(spec, cfg.a, cfg.alpha, cfg.count);
    } else {
        if (cfg.input.empty())
            throw DomainError("gauge needs --input FILE or --exact-d/--exact-gamma");
        g = sequence_gauge(read_spectrum_csv(cfg.input), cfg.a, cfg.alpha);
    }
    emit(cfg, dump({{"a", g.a}, {"alpha", g.alpha}, {"value", number(g.value)}, {"certified", g.certified()}}),
         out);
    return ok;
}

inline RelativeCover cover_from_geometry(const Geometry& geo)
{
    RelativeCover cover = self_cover(geo.outer, geo.inner);
    for (std::size_t i = 0; i < geo.inner_gamma.size(); ++i)
        if (geo.inner_gamma[i])
            cover.scalings[i] = *geo.inner_gamma[i];
    return cover;
}

inline json bound_check_json(const RelativeCover& cover, int d, const std::vector<double>& sv, bool& ok_out)
{
    const auto rep = validate_cover(cover);
    const auto eb = embedding_bound(cover, d);
    double max_ratio = 0.0;
    bool ok_all = rep.valid;
    for (std::size_t n = 0; n < sv.size(); ++n) {
        const double b = eb.bound(static_cast<double>(n + 1));
        max_ratio = std::max(max_ratio, sv[n] / b);
        if (sv[n] > b * (1.0 + 1e-9))
            ok_all = false;
    }
    ok_out = ok_all;
    return {{"N", cover.size()},           {"scalings", cover.scalings},
            {"cover_valid", rep.valid},    {"c", eb.gauge.a},
            {"alpha", eb.gauge.alpha},     {"prefactor", eb.bound.prefactor},
            {"max_ratio", max_ratio},      {"ok", ok_all}};
}

inline int run_verify_embedding(const RunConfig& cfg, std::ostream& out)
{
    QuadratureScheme scheme;
    scheme.exact_concentric = cfg.exact_moments;
    scheme.tol = std::min(scheme.tol, cfg.tol);
    if (cfg.kmax < 1)
        throw DomainError("--kmax must be >= 1");
    const int kmax = static_cast<int>(cfg.kmax);
    json j;
    bool pass = true;
    if (cfg.geometry.empty()) {
        const Prop34Report rep = verify_prop34(cfg.d, cfg.gamma, kmax, cfg.tol, scheme);
        const Point origin(static_cast<std::size_t>(cfg.d), 0.0);
        RelativeCover cover{{BallSpec(origin, 1.0)}, {cfg.gamma},
                            DomainUnion({BallSpec(origin, cfg.gamma)}), DomainUnion({BallSpec(origin, 1.0)})};
        bool bound_ok = true;
        j = {{"d", cfg.d},
             {"gamma", cfg.gamma},
             {"kmax", kmax},
             {"tol", cfg.tol},
             {"singular_values", rep.singular_values},
             {"exact_values", rep.exact_values},
             {"max_rel_error", rep.max_rel_error},
             {"pass", rep.pass},
             {"bound_check", bound_check_json(cover, cfg.d, rep.singular_values, bound_ok)}};
        pass = rep.pass && bound_ok;
    } else {
        const Geometry geo = load_geometry(cfg.geometry);
        if (geo.outer.balls.size() != 1)
            throw DomainError("verify-embedding: the outer domain must be a single ball");
        const int d = geo.outer.dim();
        const OrthonormalBasis basis = orthonormal_basis(geo.outer.balls.front(), kmax);
        const EmbeddingResult emb = embedding_matrix(basis, geo.inner, scheme);
        j = {{"d", d}, {"kmax", kmax}, {"tol", cfg.tol}, {"singular_values", emb.singular_values}};
        const bool concentric = geo.inner.balls.size() == 1 && same_center(geo.inner.balls.front(), geo.outer.balls.front());
        if (concentric) {
            const double g = geo.outer.balls.front().radius / geo.inner.balls.front().radius;
            const ExactBallSpectrum spec(d, g);
            std::vector<double> ex;
            double err = 0.0;
            const auto cnt = static_cast<std::size_t>(h_dim(d, kmax - 1));
            for (std::size_t n = 0; n < cnt; ++n) {
                ex.push_back(exact_singular_value(spec, static_cast<std::int64_t>(n + 1)));
                err = std::max(err, std::abs(emb.singular_values[n] - ex.back()) / ex.back());
            }
            j["exact_values"] = ex;
            j["max_rel_error"] = err;
            pass = err < cfg.tol;
        } else {
            j["exact_values"] = nullptr;
            j["max_rel_error"] = nullptr;
        }
        bool bound_ok = true;
        j["bound_check"] = bound_check_json(cover_from_geometry(geo), d, emb.singular_values, bound_ok);
        pass = pass && bound_ok;
        j["pass"] = pass;
    }
    emit(cfg, dump(j), out);
    return pass ? ok : validation_failure;
}

inline int run_cover_bound(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.geometry.empty())
        throw DomainError("cover-bound needs --geometry FILE");
    const Geometry geo = load_geometry(cfg.geometry);
    const int d = geo.outer.dim();
    if (cfg.d != d)
        throw DomainError("--d " + std::to_string(cfg.d) + " does not match the geometry dimension "
                          + std::to_string(d));
    RelativeCover cover;
    if (cfg.greedy) {
        GreedyOptions opt;
        opt.ball_radius = cfg.radius;
        opt.grid_step = cfg.step;
        opt.seed = cfg.seed;
        cover = greedy_cover(geo.outer, geo.inner, opt);
    } else {
        cover = cover_from_geometry(geo);
    }
    const CoverReport rep = validate_cover(cover, 4096, cfg.seed);
    const EmbeddingBound eb = embedding_bound(cover, d);
    const DecayBound ev = eigenvalue_bound(cover, d, cfg.K);
    json table = json::array();
    for (std::int64_t n = 1; n <= cfg.count; ++n)
        table.push_back({{"n", n}, {"embedding", eb.bound(static_cast<double>(n))}, {"eigen", ev(static_cast<double>(n))}});
    json balls = json::array();
    for (std::size_t i = 0; i < cover.size(); ++i)
        balls.push_back({{"center", cover.balls[i].center}, {"radius", cover.balls[i].radius}, {"gamma", cover.scalings[i]}});
    json viol = json::array();
    for (const auto& v : rep.violations)
        viol.push_back({{"condition", std::string(1, v.condition)}, {"ball", v.ball}, {"witness", v.witness}});
    const json j{{"d", d},
                 {"K", cfg.K},
                 {"N", cover.size()},
                 {"cover", balls},
                 {"valid", rep.valid},
                 {"violations", viol},
                 {"Gamma", eb.efficiency.gamma_logs},
                 {"norm_min", eb.efficiency.norm_min},
                 {"norm_dminus1", eb.efficiency.norm_k},
                 {"c_embedding", eb.gauge.a},
                 {"c_eigen", ev.rate},
                 {"alpha", eb.gauge.alpha},
                 {"prefactor", eb.bound.prefactor},
                 {"prefactor_eigen", ev.prefactor},
                 {"bound_table", table}};
    emit(cfg, dump(j), out);
    return rep.valid ? ok : validation_failure;
}

inline json eigen_report_json(const ConvergedSpectrum& cs, const DecayBound& bound, double K, double reference_ratio,
                              int& violations)
{
    const std::vector<bool> conv(cs.converged.begin(), cs.converged.end());
    std::unique_ptr<bool[]> flags(new bool[conv.size()]);
    for (std::size_t i = 0; i < conv.size(); ++i)
        flags[i] = conv[i];
    const DecayReport rep = decay_report(cs.eigenvalues, bound, std::span<const bool>(flags.get(), conv.size()));
    json ev = json::array();
    for (const auto& r : rep.rows)
        ev.push_back({{"n", r.n},
                      {"re", r.lambda.real()},
                      {"im", r.lambda.imag()},
                      {"abs", r.abs},
                      {"bound", r.bound},
                      {"ok", r.ok},
                      {"converged", r.converged}});
    violations = rep.violations;
    return {{"kmax", cs.kmax},
            {"K_estimate", K},
            {"c", bound.rate},
            {"alpha", bound.alpha},
            {"prefactor", bound.prefactor},
            {"eigenvalues", ev},
            {"violations", rep.violations},
            {"fitted_ratio", std::isnan(rep.fitted_ratio) ? json(nullptr) : json(rep.fitted_ratio)},
            {"reference_ratio", reference_ratio}};
}

inline int run_halfplane(const RunConfig& cfg, std::ostream& out)
{
    if (!(cfg.gamma > 1.0 && cfg.gamma < 2.0))
        throw DomainError("--gamma must lie in (1, 2) so that B_{gamma,2i} stays inside the half-plane");
    if (cfg.kmax < 1)
        throw DomainError("--kmax must be >= 1");
    const ConformalMap phi = halfplane_example_map();
    const BallSpec disc({0.0, 2.0}, cfg.gamma);   // Omega''
    const BallSpec unit({0.0, 2.0}, 1.0);         // Omega', contains U + 2i
    GalerkinScheme scheme;
    scheme.tol = cfg.quad_tol;
    const ConvergedSpectrum cs = converged_eigenvalues(phi, disc, static_cast<int>(cfg.kmax), cfg.conv_tol, scheme);
    const double K = cfg.K_override ? *cfg.K_override
                                    : estimate_K(phi, DomainUnion({unit}), DomainUnion({disc}), cfg.samples);
    const RelativeCover cover{{unit}, {cfg.gamma}, DomainUnion({disc}), DomainUnion({unit})};
    const DecayBound bound = eigenvalue_bound(cover, 2, K);
    int violations = 0;
    json j = eigen_report_json(cs, bound, K, std::pow(cfg.gamma, -0.25), violations);
    j["gamma"] = cfg.gamma;
    emit(cfg, dump(j), out);
    return violations == 0 ? ok : validation_failure;
}

inline int run_compose(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.geometry.empty())
        throw DomainError("compose needs --geometry FILE (outer: Galerkin disc, inner: cover of the image domain)");
    const Geometry geo = load_geometry(cfg.geometry);
    if (geo.outer.dim() != 2)
        throw DomainError("compose: planar geometry required");
    if (geo.outer.balls.size() != 1)
        throw DomainError("compose: the outer domain must be a single disc");
    const BallSpec disc = geo.outer.balls.front();

    ConformalMap phi;
    if (cfg.map == "scaling") {
        phi = scaling_map(cfg.rho, Complex(disc.center[0], disc.center[1]));
    } else if (cfg.map == "halfplane") {
        phi = halfplane_example_map();
    } else if (cfg.map == "mobius") {
        if (cfg.coeffs.size() != 8)
            throw DomainError("--coeffs needs 8 numbers: a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im");
        const auto& c = cfg.coeffs;
        phi = mobius_map({c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]});
    } else {
        throw DomainError("--map must be one of scaling, halfplane, mobius");
    }
    if (cfg.kmax < 1)
        throw DomainError("--kmax must be >= 1");

    const RelativeCover cover = cover_from_geometry(geo);
    GalerkinScheme scheme;
    scheme.tol = cfg.quad_tol;
    const ConvergedSpectrum cs = converged_eigenvalues(phi, disc, static_cast<int>(cfg.kmax), cfg.conv_tol, scheme);
    const double K = cfg.K_override ? *cfg.K_override : estimate_K(phi, geo.inner, geo.outer, cfg.samples);
    const DecayBound bound = eigenvalue_bound(cover, 2, K);
    int violations = 0;
    const Efficiency eff = efficiency(cover, 1);
    json j = eigen_report_json(cs, bound, K, std::exp(-0.25 * eff.norm_k), violations);
    j["map"] = cfg.map;
    j["cover_valid"] = validate_cover(cover).valid;
    emit(cfg, dump(j), out);
    return violations == 0 && j["cover_valid"].get<bool>() ? ok : validation_failure;
}

} // namespace detail

/// Parses the command line and runs the selected subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Spectra and decay bounds for embeddings and operators on harmonic function spaces", "harmspec"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output, "Output file (default: standard output)");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* dims = app.add_subcommand("dims", "Spherical harmonic dimension counts N_d(k), h_d(k)");
    dims->add_option("--d", cfg.d, "Spatial dimension (>= 2)")->required();
    dims->add_option("--kmax", cfg.kmax, "Largest degree")->required();
    add_format(dims);
    add_output(dims);

    auto* sv = app.add_subcommand("singvals", "Exact singular values of the concentric-ball restriction");
    sv->add_option("--d", cfg.d, "Spatial dimension (>= 2)")->required();
    sv->add_option("--gamma", cfg.gamma, "Dilation factor (> 1)")->required();
    sv->add_option("--count", cfg.count, "Number of singular values")->required();
    sv->add_option("--summary", cfg.summary, "Also write the JSON summary to this file (csv mode)");
    add_format(sv);
    add_output(sv);

    auto* gauge = app.add_subcommand("gauge", "Exponential-class gauge of a spectrum");
    gauge->add_option("--input", cfg.input, "CSV file, one value per line");
    gauge->add_option("--exact-d", cfg.exact_d, "Use the exact ball spectrum in this dimension");
    gauge->add_option("--exact-gamma", cfg.exact_gamma, "Dilation factor of the exact ball spectrum");
    gauge->add_option("--count", cfg.count, "Prefix length for the exact spectrum");
    gauge->add_option("--a", cfg.a, "Rate a (> 0)")->required();
    gauge->add_option("--alpha", cfg.alpha, "Exponent alpha (> 0)")->required();
    add_output(gauge);

    auto* ve = app.add_subcommand("verify-embedding", "Numerical singular values of a ball-to-ball-union restriction");
    ve->add_option("--d", cfg.d, "Spatial dimension (concentric mode)");
    ve->add_option("--gamma", cfg.gamma, "Dilation factor (concentric mode)");
    ve->add_option("--kmax", cfg.kmax, "Largest polynomial degree")->required();
    ve->add_option("--tol", cfg.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    ve->add_option("--geometry", cfg.geometry, "Geometry JSON (outer: single source ball, inner: target union)");
    ve->add_flag("--exact-moments", cfg.exact_moments, "Closed-form moments for concentric targets instead of quadrature");
    add_output(ve);

    auto* cb = app.add_subcommand("cover-bound", "Relative cover efficiency and decay bounds");
    cb->add_option("--geometry", cfg.geometry, "Geometry JSON")->required();
    cb->add_option("--d", cfg.d, "Spatial dimension")->required();
    cb->add_option("--K", cfg.K, "Operator constant for the eigenvalue bound")->check(CLI::NonNegativeNumber);
    cb->add_flag("--greedy", cfg.greedy, "Build the cover greedily instead of using the inner balls");
    cb->add_option("--radius", cfg.radius, "Greedy ball radius")->check(CLI::PositiveNumber);
    cb->add_option("--step", cfg.step, "Greedy grid step")->check(CLI::PositiveNumber);
    cb->add_option("--count", cfg.count, "Rows in the bound table");
    cb->add_option("--seed", cfg.seed, "Sampling seed");
    add_output(cb);

    auto add_galerkin = [&](CLI::App* sub) {
        sub->add_option("--kmax", cfg.kmax, "Largest disc-basis degree");
        sub->add_option("--conv-tol", cfg.conv_tol, "Relative eigenvalue stability for convergence")
            ->check(CLI::PositiveNumber);
        sub->add_option("--quad-tol", cfg.quad_tol, "Max Galerkin entry change between quadrature refinements")
            ->check(CLI::PositiveNumber);
        sub->add_option("--samples", cfg.samples, "Samples for the K estimate");
        sub->add_option("--K", cfg.K_override, "Use this operator constant instead of estimating it");
        add_output(sub);
    };

    auto* hp = app.add_subcommand("halfplane-example", "Composition operator phi = psi^{-1} + 2i on the half-plane");
    hp->add_option("--gamma", cfg.gamma, "Radius of the disc B_{gamma,2i}, in (1,2)");
    add_galerkin(hp);

    auto* comp = app.add_subcommand("compose", "Composition operator from the built-in map catalog");
    comp->add_option("--map", cfg.map, "scaling | halfplane | mobius")
        ->check(CLI::IsMember({"scaling", "halfplane", "mobius"}));
    comp->add_option("--rho", cfg.rho, "Scaling factor (scaling map)");
    comp->add_option("--coeffs", cfg.coeffs, "Mobius coefficients a,b,c,d as re,im pairs")->delimiter(',');
    comp->add_option("--geometry", cfg.geometry, "Geometry JSON (outer: Galerkin disc, inner: cover of the image)")
        ->required();
    add_galerkin(comp);

    cfg.gamma = 2.0;
    cfg.kmax = 4;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    if (hp->parsed()) {
        if (hp->count("--gamma") == 0)
            cfg.gamma = 1.9;
        if (hp->count("--kmax") == 0)
            cfg.kmax = 25;
    }
    if (comp->parsed() && comp->count("--kmax") == 0)
        cfg.kmax = 25;

    try {
        if (dims->parsed())
            return detail::run_dims(cfg, out);
        if (sv->parsed())
            return detail::run_singvals(cfg, out);
        if (gauge->parsed())
            return detail::run_gauge(cfg, out);
        if (ve->parsed())
            return detail::run_verify_embedding(cfg, out);
        if (cb->parsed())
            return detail::run_cover_bound(cfg, out);
        if (hp->parsed())
            return detail::run_halfplane(cfg, out);
        if (comp->parsed())
            return detail::run_compose(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return validation_failure;
    }
    return usage_error;
}

} // namespace harmspec::cli

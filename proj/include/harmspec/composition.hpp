#pragma once

// Galerkin discretisation of composition operators f |-> f o phi on planar
// harmonic functions, with phi conformal.
//
// The operator is represented on h^2 of a disc D = B_{R,c}
// (the intermediate domain): phi maps D into a compact subset of D,
// so f o phi is again in h^2(D) and the truncated matrix
//
//     M_ij = int_D e_j(phi(x)) e_i(x) dx
//
// over the explicit orthonormal disc basis {e_i} approximates its spectrum.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ball_embedding.hpp"
#include "dims.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "quadrature.hpp"

namespace harmspec {

using Complex = std::complex<double>;

// --- the half-plane example --------------------------------------------------

inline bool in_upper_half_plane(Complex w) { return w.imag() > 0.0; }

inline bool in_semidisc(Complex z) { return z.imag() > 0.0 && std::abs(z) < 1.0; }

/// psi(z) = ((1+z)/(1-z))^2, mapping the upper unit semidisc onto the upper half-plane.
inline Complex example_psi(Complex z)
{
    if (!in_semidisc(z))
        throw DomainError("example_psi: argument outside the upper unit semidisc");
    const Complex m = (1.0 + z) / (1.0 - z);
    return m * m;
}

/// psi'(z) = 4 (1+z) / (1-z)^3.
inline Complex example_psi_derivative(Complex z)
{
    const Complex u = 1.0 - z;
    return 4.0 * (1.0 + z) / (u * u * u);
}

/// psi^{-1}(w) = (sqrt(w) - 1) / (sqrt(w) + 1), principal square root.
inline Complex example_psi_inv(Complex w)
{
    if (!in_upper_half_plane(w))
        throw DomainError("example_psi_inv: argument outside the upper half-plane");
    const Complex s = std::sqrt(w);
    return (s - 1.0) / (s + 1.0);
}

/// phi = psi^{-1} + 2i: the half-plane onto the semidisc centred at 2i.
inline Complex example_phi(Complex w)
{
    return example_psi_inv(w) + Complex(0.0, 2.0);
}

/// phi'(w) = 1 / (sqrt(w) (sqrt(w) + 1)^2).
inline Complex example_phi_derivative(Complex w)
{
    if (!in_upper_half_plane(w))
        throw DomainError("example_phi_derivative: argument outside the upper half-plane");
    const Complex s = std::sqrt(w);
    return 1.0 / (s * (s + 1.0) * (s + 1.0));
}

// --- conformal maps ------------------------------------------------------------

struct ConformalMap {
    std::string name;
    std::function<Complex(Complex)> map;
    std::function<Complex(Complex)> derivative;
    std::function<bool(Complex)> in_domain = [](Complex) { return true; };

    Complex operator()(Complex z) const
    {
        if (!in_domain(z))
            throw DomainError(name + ": evaluation outside the map's domain");
        return map(z);
    }
};

inline ConformalMap identity_map()
{
    return {"identity", [](Complex z) { return z; }, [](Complex) { return Complex(1.0); }};
}

/// z |-> center + rho (z - center).
inline ConformalMap scaling_map(double rho, Complex center = 0.0)
{
    if (!(rho > 0.0))
        throw DomainError("scaling_map: rho must be positive");
    return {"scaling", [=](Complex z) { return center + rho * (z - center); },
            [=](Complex) { return Complex(rho); }};
}

/// z |-> (a z + b) / (c z + d), ad - bc != 0.
inline ConformalMap mobius_map(Complex a, Complex b, Complex c, Complex d)
{
    const Complex det = a * d - b * c;
    if (std::abs(det) == 0.0)
        throw DomainError("mobius_map: degenerate coefficients (ad - bc = 0)");
    ConformalMap m{"mobius", [=](Complex z) { return (a * z + b) / (c * z + d); },
                   [=](Complex z) {
                       const Complex q = c * z + d;
                       return det / (q * q);
                   }};
    m.in_domain = [=](Complex z) { return std::abs(c * z + d) > 0.0; };
    return m;
}

inline ConformalMap halfplane_example_map()
{
    ConformalMap m{"halfplane-example", [](Complex w) { return example_phi(w); },
                   [](Complex w) { return example_phi_derivative(w); }};
    m.in_domain = in_upper_half_plane;
    return m;
}

// --- disc basis ------------------------------------------------------------------

/// Orthonormal basis of harmonic polynomials of degree <= kmax on the disc
/// B_{R,c}: 1, then Re w^k, Im w^k for k >= 1 with w = (z - c)/R.
struct DiscBasis {
    Complex center;
    double radius = 1.0;
    int kmax = 0;

    std::size_t size() const { return static_cast<std::size_t>(2 * kmax + 1); }

    static double norm_factor(int k, double R)
    {
        return k == 0 ? 1.0 / std::sqrt(M_PI * R * R) : std::sqrt((2.0 * k + 2.0) / (M_PI * R * R));
    }

    /// Degree of basis function i.
    static int degree(std::size_t i) { return static_cast<int>((i + 1) / 2); }

    void evaluate(Complex z, double* out) const
    {
        const Complex w = (z - center) / radius;
        Complex p = 1.0;
        out[0] = norm_factor(0, radius);
        for (int k = 1; k <= kmax; ++k) {
            p *= w;
            const double f = norm_factor(k, radius);
            out[2 * k - 1] = f * p.real();
            out[2 * k] = f * p.imag();
        }
    }
};

// --- Galerkin operator -----------------------------------------------------------

struct GalerkinScheme {
    int radial = 32;
    int angular = 64;
    double tol = 1e-10; ///< max entry change between refinements
    int max_refinements = 6;
};

struct GalerkinOperator {
    DiscBasis basis;
    Eigen::MatrixXd matrix;
    int radial = 0;
    int angular = 0;
    double last_change = 0.0;
};

namespace detail {

inline Eigen::MatrixXd galerkin_assemble(const ConformalMap& phi, const DiscBasis& basis, int radial, int angular)
{
    const BallSpec disc({basis.center.real(), basis.center.imag()}, basis.radius);
    const PointRule rule = ball_rule(disc, radial, angular);
    const auto n = static_cast<Eigen::Index>(basis.size());
    const auto np = static_cast<Eigen::Index>(rule.size());
    Eigen::MatrixXd E(np, n), F(np, n);
    std::vector<double> buf(basis.size());
    for (Eigen::Index q = 0; q < np; ++q) {
        const auto& pt = rule.points[static_cast<std::size_t>(q)];
        const Complex z(pt[0], pt[1]);
        basis.evaluate(z, buf.data());
        for (Eigen::Index i = 0; i < n; ++i)
            E(q, i) = buf[static_cast<std::size_t>(i)] * rule.weights[static_cast<std::size_t>(q)];
        basis.evaluate(phi(z), buf.data());
        for (Eigen::Index i = 0; i < n; ++i)
            F(q, i) = buf[static_cast<std::size_t>(i)];
    }
    return E.transpose() * F;
}

} // namespace detail

/// M_ij = (L_phi e_j, e_i) on h^2(disc), refined until entries settle.
inline GalerkinOperator galerkin_matrix(const ConformalMap& phi, const BallSpec& disc, int kmax,
                                        const GalerkinScheme& scheme = {})
{
    if (disc.dim() != 2)
        throw DomainError("galerkin_matrix: composition operators are planar (d = 2)");
    if (kmax < 1)
        throw DomainError("galerkin_matrix: kmax must be >= 1");
    GalerkinOperator op;
    op.basis = {Complex(disc.center[0], disc.center[1]), disc.radius, kmax};
    int radial = std::max(scheme.radial, kmax + 2);
    int angular = std::max(scheme.angular, 2 * kmax + 2);
    Eigen::MatrixXd M = detail::galerkin_assemble(phi, op.basis, radial, angular);
    for (int it = 0; it < scheme.max_refinements; ++it) {
        const int r2 = 2 * radial, a2 = 2 * angular;
        Eigen::MatrixXd M2 = detail::galerkin_assemble(phi, op.basis, r2, a2);
        const double change = (M2 - M).cwiseAbs().maxCoeff();
        radial = r2;
        angular = a2;
        M = std::move(M2);
        op.last_change = change;
        if (change < scheme.tol) {
            op.matrix = std::move(M);
            op.radial = radial;
            op.angular = angular;
            return op;
        }
    }
    throw NumericalError("galerkin_matrix: quadrature did not converge (last max entry change "
                         + std::to_string(op.last_change) + ")");
}

/// Total order on eigenvalues: |lambda| descending, then Re descending, then Im descending.
inline bool spectral_order(const Complex& x, const Complex& y)
{
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay)
        return ax > ay;
    if (x.real() != y.real())
        return x.real() > y.real();
    return x.imag() > y.imag();
}

inline std::vector<Complex> sorted_eigenvalues(const Eigen::MatrixXd& m)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success)
        throw NumericalError("eigensolver failed");
    std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), spectral_order);
    return ev;
}

inline std::vector<Complex> galerkin_eigenvalues(const GalerkinOperator& op)
{
    return sorted_eigenvalues(op.matrix);
}

struct ConvergedSpectrum {
    std::vector<Complex> eigenvalues; ///< at the requested kmax
    std::vector<bool> converged;
    int kmax = 0;
};

/// Eigenvalues at kmax, flagged converged when the relative change
/// kmax -> kmax+1 and kmax+1 -> kmax+2 both stay below `rel_tol`.
inline ConvergedSpectrum converged_eigenvalues(const ConformalMap& phi, const BallSpec& disc, int kmax,
                                               double rel_tol = 1e-6, const GalerkinScheme& scheme = {})
{
    std::vector<std::vector<Complex>> runs;
    for (int step = 0; step <= 2; ++step)
        runs.push_back(galerkin_eigenvalues(galerkin_matrix(phi, disc, kmax + step, scheme)));
    ConvergedSpectrum out;
    out.kmax = kmax;
    out.eigenvalues = runs[0];
    out.converged.assign(runs[0].size(), false);
    for (std::size_t n = 0; n < runs[0].size(); ++n) {
        const double a0 = std::abs(runs[0][n]);
        if (a0 == 0.0)
            continue;
        const double c1 = std::abs(runs[1][n] - runs[0][n]) / a0;
        const double c2 = std::abs(runs[2][n] - runs[1][n]) / std::abs(runs[1][n]);
        out.converged[n] = c1 < rel_tol && c2 < rel_tol;
    }
    return out;
}

// --- operator constant -------------------------------------------------------------

/// Change-of-variables estimate of K = sup p_{Omega''}(L f) / p_{Omega'}(f):
/// sup over sampled z in the closure of Omega'' of 1/|phi'(z)|. Each sampled
/// image phi(z) must lie in (the closure of) Omega'.
inline double estimate_K(const ConformalMap& phi, const DomainUnion& omega_prime, const DomainUnion& omega_dprime,
                         int n_samples = 20000)
{
    if (omega_prime.dim() != 2 || omega_dprime.dim() != 2)
        throw DomainError("estimate_K: planar domains required");
    if (n_samples < 16)
        throw DomainError("estimate_K: need at least 16 samples");
    const int per_ball = std::max(16, n_samples / static_cast<int>(omega_dprime.balls.size()));
    const int rings = std::max(2, static_cast<int>(std::sqrt(per_ball / 8.0)));
    const int spokes = std::max(8, per_ball / rings);

    auto value_at = [&](Complex z) {
        const Complex image = phi(z);
        if (!omega_prime.contains(std::vector<double>{image.real(), image.imag()}, 1e-9))
            throw GeometryError("estimate_K: phi maps a point of Omega'' outside Omega'");
        const double dphi = std::abs(phi.derivative(z));
        if (!(dphi > 0.0))
            throw DomainError("estimate_K: phi' vanishes on Omega''");
        return 1.0 / dphi;
    };

    double best = 0.0;
    for (const auto& b : omega_dprime.balls) {
        const Complex c(b.center[0], b.center[1]);
        double ring_best = 0.0, best_theta = 0.0;
        best = std::max(best, value_at(c));
        for (int i = 1; i <= rings; ++i) {
            const double r = b.radius * i / rings;
            for (int j = 0; j < spokes; ++j) {
                const double t = 2.0 * M_PI * j / spokes;
                const double v = value_at(c + std::polar(r, t));
                best = std::max(best, v);
                if (i == rings && v > ring_best) {
                    ring_best = v;
                    best_theta = t;
                }
            }
        }
        // refine along the boundary circle around the best spoke
        double lo = best_theta - 2.0 * M_PI / spokes, hi = best_theta + 2.0 * M_PI / spokes;
        for (int it = 0; it < 100; ++it) {
            const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (value_at(c + std::polar(b.radius, m1)) < value_at(c + std::polar(b.radius, m2)))
                lo = m1;
            else
                hi = m2;
        }
        best = std::max(best, value_at(c + std::polar(b.radius, 0.5 * (lo + hi))));
    }
    return best;
}

// --- reporting -----------------------------------------------------------------------

struct DecayRow {
    int n = 0;
    Complex lambda;
    double abs = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    bool ok = true;
    bool converged = true;
};

struct DecayReport {
    std::vector<DecayRow> rows;
    int violations = 0;      ///< among rows that are converged
    double fitted_ratio = 0.0; ///< per-index geometric decay of block means; NaN if not enough blocks
};

/// Table of |lambda_n| against the bound. Violations only count converged
/// rows. The fitted ratio is exp(slope) of a least-squares line through
/// (block centre index, log mean |lambda| over the block) for converged
/// degree blocks k >= 1 of the planar basis.
inline DecayReport decay_report(std::span<const Complex> eigenvalues, const DecayBound& bound,
                                std::span<const bool> converged = {})
{
    DecayReport rep;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        DecayRow r;
        r.n = static_cast<int>(i + 1);
        r.lambda = eigenvalues[i];
        r.abs = std::abs(r.lambda);
        r.bound = bound(static_cast<double>(r.n));
        r.ratio = r.bound > 0.0 ? r.abs / r.bound : std::numeric_limits<double>::infinity();
        r.ok = r.abs <= r.bound;
        r.converged = converged.empty() ? true : converged[i];
        if (!r.ok && r.converged)
            ++rep.violations;
        rep.rows.push_back(r);
    }

    std::vector<double> xs, ys;
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t first = h_dim(2, k - 1) + 1, last = h_dim(2, k);
        if (last > static_cast<std::int64_t>(rep.rows.size()))
            break;
        double sum = 0.0;
        bool all_conv = true;
        for (std::int64_t n = first; n <= last; ++n) {
            sum += rep.rows[static_cast<std::size_t>(n - 1)].abs;
            all_conv = all_conv && rep.rows[static_cast<std::size_t>(n - 1)].converged;
        }
        if (!all_conv)
            break;
        xs.push_back(0.5 * static_cast<double>(first + last));
        ys.push_back(std::log(sum / static_cast<double>(last - first + 1)));
    }
    if (xs.size() >= 2) {
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        rep.fitted_ratio = std::exp(sxy / sxx);
    } else {
        rep.fitted_ratio = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

} // namespace harmspec

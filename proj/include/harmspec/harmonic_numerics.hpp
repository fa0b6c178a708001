#pragma once

// Numerical verification layer: harmonic polynomial spaces, Bergman
// orthonormal bases on balls, and the matrix of the restriction operator
// between a ball and a ball union.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ball_embedding.hpp"
#include "dims.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"

namespace harmspec {

/// Basis of the homogeneous harmonic polynomials of degree k (one row per
/// basis polynomial, integer-valued rational coefficients).
struct HarmonicSubspace {
    int d = 2;
    int k = 0;
    std::vector<std::vector<Rational>> basis;

    std::size_t dimension() const { return basis.size(); }

    Eigen::MatrixXd as_matrix() const
    {
        const std::size_t cols = basis.empty() ? 0 : basis.front().size();
        Eigen::MatrixXd m(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(cols));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis[i][j].convert_to<double>();
        return m;
    }
};

namespace detail {

/// Kernel of a rational matrix via reduced row echelon form.
inline std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> a, std::size_t cols)
{
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a[i][free];
        // scale to coprime integers
        BigInt l = 1;
        for (const auto& q : v)
            if (q != 0)
                l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(q)));
        BigInt g = 0;
        for (auto& q : v) {
            q *= l;
            if (q != 0)
                g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::numerator(q)));
        }
        if (g > 1)
            for (auto& q : v)
                q /= g;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace detail

/// Nullspace of the Laplacian on homogeneous degree-k polynomials.
inline HarmonicSubspace harmonic_space(int d, int k)
{
    detail::require_dimension(d);
    if (k < 0)
        throw DomainError("harmonic_space: degree must be >= 0");
    const MonomialIndex src(d, k);
    HarmonicSubspace out;
    out.d = d;
    out.k = k;
    if (k < 2) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::vector<Rational> v(src.size(), Rational(0));
            v[i] = 1;
            out.basis.push_back(std::move(v));
        }
    } else {
        const MonomialIndex dst(d, k - 2);
        std::vector<std::vector<Rational>> lap(dst.size(), std::vector<Rational>(src.size(), Rational(0)));
        for (std::size_t c = 0; c < src.size(); ++c) {
            for (int i = 0; i < d; ++i) {
                const int e = src[c][static_cast<std::size_t>(i)];
                if (e < 2)
                    continue;
                MultiIndex lowered = src[c];
                lowered[static_cast<std::size_t>(i)] -= 2;
                lap[dst.at(lowered)][c] += e * (e - 1);
            }
        }
        out.basis = detail::rational_nullspace(std::move(lap), src.size());
    }
    if (static_cast<std::int64_t>(out.basis.size()) != n_dim(d, k))
        throw NumericalError("harmonic_space: nullspace dimension " + std::to_string(out.basis.size())
                             + " differs from N_d(k) = " + std::to_string(n_dim(d, k)));
    return out;
}

/// Bergman-orthonormal homogeneous harmonic polynomials on a ball, ordered by
/// degree.
struct OrthonormalBasis {
    BallSpec ball;
    int max_degree = 0;
    std::vector<HomogeneousPolynomial> polynomials;

    int d() const { return ball.dim(); }
    std::size_t size() const { return polynomials.size(); }

    /// Values of every basis polynomial at the points (rows = points).
    Eigen::MatrixXd evaluate(const std::vector<Point>& pts) const
    {
        const int d = ball.dim();
        const auto np = static_cast<Eigen::Index>(pts.size());
        Eigen::MatrixXd out(np, static_cast<Eigen::Index>(polynomials.size()));
        std::size_t col = 0;
        for (int k = 0; k <= max_degree; ++k) {
            const auto mons = monomials(d, k);
            Eigen::MatrixXd V(np, static_cast<Eigen::Index>(mons.size()));
            for (Eigen::Index p = 0; p < np; ++p) {
                for (std::size_t m = 0; m < mons.size(); ++m) {
                    double v = 1.0;
                    for (int j = 0; j < d; ++j) {
                        const double y = pts[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)]
                                         - ball.center[static_cast<std::size_t>(j)];
                        for (int e = 0; e < mons[m][static_cast<std::size_t>(j)]; ++e)
                            v *= y;
                    }
                    V(p, static_cast<Eigen::Index>(m)) = v;
                }
            }
            const std::size_t block_begin = col;
            while (col < polynomials.size() && polynomials[col].degree == k)
                ++col;
            const auto nb = static_cast<Eigen::Index>(col - block_begin);
            Eigen::MatrixXd C(static_cast<Eigen::Index>(mons.size()), nb);
            for (Eigen::Index b = 0; b < nb; ++b)
                for (std::size_t m = 0; m < mons.size(); ++m)
                    C(static_cast<Eigen::Index>(m), b) = polynomials[block_begin + static_cast<std::size_t>(b)].coeffs[m];
            out.middleCols(static_cast<Eigen::Index>(block_begin), nb) = V * C;
        }
        return out;
    }
};

/// Gram-Schmidt inside each degree block (blocks are mutually orthogonal on a
/// ball centred at the expansion point). Two orthogonalisation passes per vector.
inline OrthonormalBasis orthonormal_basis(const BallSpec& ball, int kmax)
{
    if (kmax < 0)
        throw DomainError("orthonormal_basis: kmax must be >= 0");
    const int d = ball.dim();
    detail::require_dimension(d);
    OrthonormalBasis out;
    out.ball = ball;
    out.max_degree = kmax;

    for (int k = 0; k <= kmax; ++k) {
        const HarmonicSubspace hs = harmonic_space(d, k);
        const Eigen::MatrixXd B = hs.as_matrix();
        const auto mons = monomials(d, k);
        const auto nm = static_cast<Eigen::Index>(mons.size());
        // inner-product matrix on coefficient space
        const int e = d + 2 * k;
        const double scale = d * unit_ball_volume(d) * std::pow(ball.radius, e) / e;
        Eigen::MatrixXd S(nm, nm);
        for (Eigen::Index i = 0; i < nm; ++i)
            for (Eigen::Index j = 0; j <= i; ++j)
                S(i, j) = S(j, i) = scale * sphere_moment_value(detail::add(mons[static_cast<std::size_t>(i)],
                                                                            mons[static_cast<std::size_t>(j)]));

        std::vector<Eigen::VectorXd> q;
        for (Eigen::Index r = 0; r < B.rows(); ++r) {
            Eigen::VectorXd v = B.row(r).transpose();
            const double original = std::sqrt(v.dot(S * v));
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : q)
                    v -= u.dot(S * v) * u;
            const double nv = std::sqrt(std::max(0.0, v.dot(S * v)));
            if (!(nv > 1e-12 * original))
                throw NumericalError("orthonormal_basis: degree-" + std::to_string(k)
                                     + " Gram matrix is numerically singular");
            q.push_back(v / nv);
        }
        for (const auto& v : q) {
            HomogeneousPolynomial p;
            p.d = d;
            p.degree = k;
            p.center = ball.center;
            p.coeffs.assign(v.data(), v.data() + v.size());
            out.polynomials.push_back(std::move(p));
        }
    }
    return out;
}

/// Exact Gram matrix of a basis over a ball with the same centre.
inline Eigen::MatrixXd concentric_gram(const OrthonormalBasis& basis, const BallSpec& target)
{
    const auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
            const auto& f = basis.polynomials[static_cast<std::size_t>(i)];
            const auto& g = basis.polynomials[static_cast<std::size_t>(j)];
            if (f.degree != g.degree)
                continue; // orthogonal on every concentric ball
            G(i, j) = G(j, i) = ball_inner_product(f, g, target);
        }
    return G;
}

struct QuadratureScheme {
    int radial = 0;      ///< 0: chosen from kmax
    int angular = 0;     ///< 0: chosen from kmax
    int max_refinements = 6;
    double tol = 1e-10;  ///< refinement stops when Gram entries move less than 0.1 * tol (relative to the largest)
    bool exact_concentric = true; ///< use the closed-form moments when the target is a concentric ball
};

struct EmbeddingResult {
    Eigen::MatrixXd matrix;              ///< G^{1/2}
    Eigen::MatrixXd gram;                ///< (J e_j, J e_i) over the target
    std::vector<double> singular_values; ///< nonincreasing
    bool exact = false;
    int radial = 0;
    int angular = 0;
    int refinements = 0;
    double last_change = 0.0;
};

namespace detail {

inline void symmetric_sqrt(const Eigen::MatrixXd& G, Eigen::MatrixXd& root, std::vector<double>& sv)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    if (es.info() != Eigen::Success)
        throw NumericalError("embedding: symmetric eigensolver failed");
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    root = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
    sv.assign(lam.data(), lam.data() + lam.size());
    std::sort(sv.begin(), sv.end(), std::greater<>());
}

inline Eigen::MatrixXd quadrature_gram(const OrthonormalBasis& basis, const DomainUnion& target, int radial,
                                       int angular)
{
    const PointRule rule = union_rule(target, radial, angular);
    const Eigen::MatrixXd E = basis.evaluate(rule.points);
    const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), static_cast<Eigen::Index>(rule.weights.size()));
    Eigen::MatrixXd G = E.transpose() * w.asDiagonal() * E;
    return 0.5 * (G + G.transpose());
}

} // namespace detail

/// Matrix of the restriction h^2(source ball) -> h^2(target union) on the
/// truncated orthonormal basis. Its singular values are those of J composed
/// with the projection onto the span of the basis.
inline EmbeddingResult embedding_matrix(const OrthonormalBasis& source, const DomainUnion& target,
                                        const QuadratureScheme& scheme = {})
{
    if (target.dim() != source.d())
        throw MismatchError("embedding_matrix: dimension mismatch");
    for (const auto& b : target.balls)
        if (!b.inside(source.ball))
            throw GeometryError("embedding_matrix: target ball is not contained in the source ball");

    EmbeddingResult res;
    if (scheme.exact_concentric && target.balls.size() == 1 && same_center(target.balls.front(), source.ball)) {
        res.gram = concentric_gram(source, target.balls.front());
        detail::symmetric_sqrt(res.gram, res.matrix, res.singular_values);
        res.exact = true;
        return res;
    }

    int radial = scheme.radial > 0 ? scheme.radial : source.max_degree + 2;
    int angular = scheme.angular > 0 ? scheme.angular : 2 * source.max_degree + 2;
    Eigen::MatrixXd G = detail::quadrature_gram(source, target, radial, angular);
    for (int it = 1; it <= scheme.max_refinements; ++it) {
        radial *= 2;
        angular *= 2;
        Eigen::MatrixXd G2 = detail::quadrature_gram(source, target, radial, angular);
        // Gram entries, not singular values: the smallest singular values sit at
        // the square root of round-off and never settle below it.
        const double scale = G2.cwiseAbs().maxCoeff();
        const double change = scale > 0.0 ? (G2 - G).cwiseAbs().maxCoeff() / scale : 0.0;
        G = std::move(G2);
        res.refinements = it;
        res.last_change = change;
        if (change < 0.1 * scheme.tol) {
            detail::symmetric_sqrt(G, res.matrix, res.singular_values);
            res.gram = std::move(G);
            res.radial = radial;
            res.angular = angular;
            return res;
        }
    }
    throw NumericalError("embedding_matrix: quadrature did not converge (last relative Gram change "
                         + std::to_string(res.last_change) + ")");
}

struct Prop34Report {
    int d = 2;
    double gamma = 2.0;
    int kmax = 1;
    std::vector<double> singular_values; ///< first h_d(kmax-1) computed values
    std::vector<double> exact_values;
    double max_rel_error = 0.0;
    bool pass = false;
    bool exact_gram = false;
};

/// Builds the basis on B_gamma, restricts to B_1 (both centred at 0) and
/// compares the leading h_d(kmax-1) singular values with gamma^{-(k+d/2)}.
inline Prop34Report verify_prop34(int d, double gamma, int kmax, double tol, const QuadratureScheme& scheme = {})
{
    if (kmax < 1)
        throw DomainError("verify_prop34: kmax must be >= 1");
    const ExactBallSpectrum exact(d, gamma);
    const Point origin(static_cast<std::size_t>(d), 0.0);
    const OrthonormalBasis basis = orthonormal_basis(BallSpec(origin, gamma), kmax);
    QuadratureScheme sch = scheme;
    sch.tol = std::min(sch.tol, tol);
    const EmbeddingResult emb = embedding_matrix(basis, DomainUnion({BallSpec(origin, 1.0)}), sch);

    Prop34Report rep;
    rep.d = d;
    rep.gamma = gamma;
    rep.kmax = kmax;
    rep.exact_gram = emb.exact;
    const auto count = static_cast<std::size_t>(h_dim(d, kmax - 1));
    for (std::size_t n = 0; n < count; ++n) {
        const double s = emb.singular_values[n];
        const double e = exact_singular_value(exact, static_cast<std::int64_t>(n + 1));
        rep.singular_values.push_back(s);
        rep.exact_values.push_back(e);
        rep.max_rel_error = std::max(rep.max_rel_error, std::abs(s - e) / e);
    }
    rep.pass = rep.max_rel_error < tol;
    return rep;
}

} // namespace harmspec

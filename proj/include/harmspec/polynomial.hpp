#pragma once

// Homogeneous polynomials in d variables stored as coefficient vectors over
// the monomials x^alpha, |alpha| = k, in descending lexicographic order
// (x1^k first, xd^k last).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dims.hpp"
#include "error.hpp"
#include "geometry.hpp"

namespace harmspec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using MultiIndex = std::vector<int>;

/// All multi-indices of length d summing to k, descending lexicographic.
inline std::vector<MultiIndex> monomials(int d, int k)
{
    if (d < 1 || k < 0)
        return {};
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Position lookup for the monomials of one degree.
class MonomialIndex {
public:
    MonomialIndex(int d, int k) : list_(monomials(d, k))
    {
        for (std::size_t i = 0; i < list_.size(); ++i)
            pos_.emplace(list_[i], i);
    }

    std::size_t size() const { return list_.size(); }
    const MultiIndex& operator[](std::size_t i) const { return list_[i]; }
    const std::vector<MultiIndex>& list() const { return list_; }

    std::size_t at(const MultiIndex& a) const
    {
        auto it = pos_.find(a);
        if (it == pos_.end())
            throw MismatchError("monomial not in this degree");
        return it->second;
    }

private:
    std::vector<MultiIndex> list_;
    std::map<MultiIndex, std::size_t> pos_;
};

/// Homogeneous polynomial of a given degree in the local coordinate x - center.
struct HomogeneousPolynomial {
    int d = 2;
    int degree = 0;
    Point center;
    std::vector<double> coeffs;

    double operator()(std::span<const double> x) const
    {
        if (static_cast<int>(x.size()) != d)
            throw MismatchError("polynomial evaluation: dimension mismatch");
        const auto mons = monomials(d, degree);
        double s = 0.0;
        for (std::size_t i = 0; i < mons.size(); ++i) {
            double m = coeffs[i];
            for (int j = 0; j < d; ++j)
                m *= std::pow(x[static_cast<std::size_t>(j)] - center[static_cast<std::size_t>(j)],
                              mons[i][static_cast<std::size_t>(j)]);
            s += m;
        }
        return s;
    }
};

/// Laplacian of a homogeneous degree-k polynomial (degree k-2 result).
/// x^alpha |-> sum_i alpha_i (alpha_i - 1) x^{alpha - 2 e_i}.
inline std::vector<Rational> apply_laplacian(int d, int k, std::span<const Rational> coeffs)
{
    const MonomialIndex src(d, k);
    if (coeffs.size() != src.size())
        throw MismatchError("apply_laplacian: coefficient count does not match degree");
    if (k < 2)
        return {};
    const MonomialIndex dst(d, k - 2);
    std::vector<Rational> out(dst.size(), Rational(0));
    for (std::size_t c = 0; c < src.size(); ++c) {
        if (coeffs[c] == 0)
            continue;
        for (int i = 0; i < d; ++i) {
            const int e = src[c][static_cast<std::size_t>(i)];
            if (e < 2)
                continue;
            MultiIndex lowered = src[c];
            lowered[static_cast<std::size_t>(i)] -= 2;
            out[dst.at(lowered)] += coeffs[c] * (e * (e - 1));
        }
    }
    return out;
}

/// Integral of x^alpha over the unit sphere against normalised surface measure:
/// zero if some alpha_i is odd, otherwise
///     prod_i (alpha_i - 1)!! / prod_{j=1}^{|alpha|/2} (d + 2j - 2),  (-1)!! = 1.
inline Rational sphere_moment(std::span<const int> alpha)
{
    const int d = static_cast<int>(alpha.size());
    if (d < 1)
        throw DomainError("sphere_moment: empty multi-index");
    int total = 0;
    BigInt num = 1;
    for (int a : alpha) {
        if (a < 0)
            throw DomainError("sphere_moment: negative exponent");
        if (a % 2 != 0)
            return Rational(0);
        for (int t = a - 1; t > 1; t -= 2)
            num *= t;
        total += a;
    }
    BigInt den = 1;
    for (int j = 1; j <= total / 2; ++j)
        den *= (d + 2 * j - 2);
    return Rational(num, den);
}

/// Same value in double precision, for Gram assembly.
inline double sphere_moment_value(std::span<const int> alpha)
{
    const int d = static_cast<int>(alpha.size());
    int total = 0;
    double v = 1.0;
    for (int a : alpha) {
        if (a % 2 != 0)
            return 0.0;
        for (int t = a - 1; t > 1; t -= 2)
            v *= t;
        total += a;
    }
    for (int j = 1; j <= total / 2; ++j)
        v /= (d + 2 * j - 2);
    return v;
}

/// Volume of the unit ball in R^d.
inline double unit_ball_volume(int d)
{
    return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

namespace detail {

inline MultiIndex add(const MultiIndex& a, const MultiIndex& b)
{
    MultiIndex c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

} // namespace detail

/// Integral over the unit sphere (normalised measure) of f * g, f and g
/// given by coefficient vectors of degrees n and m.
inline double sphere_pairing(int d, int n, std::span<const double> f, int m, std::span<const double> g)
{
    const auto mf = monomials(d, n);
    const auto mg = monomials(d, m);
    double s = 0.0;
    for (std::size_t i = 0; i < mf.size(); ++i) {
        if (f[i] == 0.0)
            continue;
        for (std::size_t j = 0; j < mg.size(); ++j) {
            if (g[j] == 0.0)
                continue;
            s += f[i] * g[j] * sphere_moment_value(detail::add(mf[i], mg[j]));
        }
    }
    return s;
}

inline Rational sphere_pairing_exact(int d, int n, std::span<const Rational> f, int m,
                                     std::span<const Rational> g)
{
    const auto mf = monomials(d, n);
    const auto mg = monomials(d, m);
    Rational s = 0;
    for (std::size_t i = 0; i < mf.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < mg.size(); ++j) {
            if (g[j] == 0)
                continue;
            s += f[i] * g[j] * sphere_moment(detail::add(mf[i], mg[j]));
        }
    }
    return s;
}

/// Bergman inner product on a ball of homogeneous polynomials centred at the
/// ball centre:
///     (f, g) = d Vol(B_1) r^{d+n+m} / (d+n+m) * int_S f g dsigma.
inline double ball_inner_product(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g,
                                 const BallSpec& ball)
{
    const int d = ball.dim();
    if (f.d != d || g.d != d)
        throw MismatchError("ball_inner_product: dimension mismatch");
    if (distance(f.center, ball.center) > 1e-14 * std::max(1.0, ball.radius)
        || distance(g.center, ball.center) > 1e-14 * std::max(1.0, ball.radius))
        throw MismatchError("ball_inner_product: polynomials must be homogeneous about the ball centre");
    const int e = d + f.degree + g.degree;
    const double scale = d * unit_ball_volume(d) * std::pow(ball.radius, e) / e;
    return scale * sphere_pairing(d, f.degree, f.coeffs, g.degree, g.coeffs);
}

/// Exact variant for rational coefficients and rational radius, in units of
/// Vol(B_1) (the only irrational factor).
inline Rational ball_inner_product_exact(int d, int n, std::span<const Rational> f, int m,
                                         std::span<const Rational> g, const Rational& radius)
{
    const int e = d + n + m;
    Rational rp = 1;
    for (int i = 0; i < e; ++i)
        rp *= radius;
    return Rational(d) * rp / Rational(e) * sphere_pairing_exact(d, n, f, m, g);
}

} // namespace harmspec

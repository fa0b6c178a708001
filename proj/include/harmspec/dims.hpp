#pragma once

// Dimension counts of spherical harmonics.
//
//   N_d(k) = C(k+d-1, d-1) - C(k+d-3, d-1)   (harmonics of degree exactly k)
//   h_d(k) = C(k+d,   d  ) - C(k+d-2, d  )   (harmonics of degree at most k)
//
// with the convention C(n, r) = 0 whenever n < r (in particular for n < 0),
// and h_d(-1) = 0. Everything is exact 64-bit arithmetic; overflow throws.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "error.hpp"

namespace harmspec {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("harmspec: 64-bit overflow in combinatorics");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("harmspec: 64-bit overflow in combinatorics");
    return r;
}

inline void require_dimension(int d)
{
    if (d < 2)
        throw DomainError("dimension d must be >= 2, got " + std::to_string(d));
}

} // namespace detail

/// Binomial coefficient C(n, r); zero when n < r or r < 0 (including every
/// negative n).
inline std::int64_t binomial(std::int64_t n, std::int64_t r)
{
    if (r < 0 || n < r)
        return 0;
    if (r > n - r)
        r = n - r;
    std::int64_t c = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        // c * (n - i) / (i + 1) is exact; keep the product in 128 bits.
        const __int128 prod = static_cast<__int128>(c) * (n - i);
        const __int128 next = prod / (i + 1);
        if (next > INT64_MAX)
            throw std::overflow_error("harmspec: 64-bit overflow in binomial");
        c = static_cast<std::int64_t>(next);
    }
    return c;
}

/// Number of linearly independent spherical harmonics of degree k in d dimensions.
inline std::int64_t n_dim(int d, std::int64_t k)
{
    detail::require_dimension(d);
    if (k < 0)
        throw DomainError("degree k must be >= 0, got " + std::to_string(k));
    // C(k+d-1,d-1) - C(k+d-3,d-1), rewritten with Pascal's rule so that no
    // intermediate exceeds the result's order of magnitude
    return detail::checked_add(binomial(k + d - 2, d - 2), binomial(k + d - 3, d - 2));
}

/// Number of linearly independent harmonic polynomials of degree at most k;
/// h_dim(d, -1) == 0.
inline std::int64_t h_dim(int d, std::int64_t k)
{
    detail::require_dimension(d);
    if (k < -1)
        throw DomainError("degree k must be >= -1, got " + std::to_string(k));
    if (k == -1)
        return 0;
    // C(k+d,d) - C(k+d-2,d), same rewrite
    return detail::checked_add(binomial(k + d - 1, d - 1), binomial(k + d - 2, d - 1));
}

/// Degree block containing singular-value index n: the unique k >= 0 with
/// h_d(k-1) < n <= h_d(k).
inline std::int64_t degree_of_index(int d, std::int64_t n)
{
    detail::require_dimension(d);
    if (n < 1)
        throw DomainError("index n must be >= 1, got " + std::to_string(n));

    // h_d is strictly increasing on k >= 0; overflow means "larger than any n".
    auto at_least_n = [&](std::int64_t k) {
        try {
            return h_dim(d, k) >= n;
        } catch (const std::overflow_error&) {
            return true;
        }
    };

    std::int64_t hi = 1;
    while (!at_least_n(hi))
        hi *= 2;
    std::int64_t lo = 0;
    if (at_least_n(lo))
        return 0;
    // invariant: !at_least_n(lo), at_least_n(hi)
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (at_least_n(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace harmspec

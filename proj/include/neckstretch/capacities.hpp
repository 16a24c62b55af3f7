#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "neckstretch/radical.hpp"
#include "neckstretch/rational.hpp"

namespace neckstretch {

// Classical embedding bounds for a polydisk into a ball, used as the
// comparison line: volume, inclusion, folding, and the lattice-count ECH
// capacities.

struct Polydisk {
    Rational r, s; // capacities of the two disk factors, kept with r <= s

    Polydisk(Rational r_, Rational s_) : r(r_), s(s_) {
        if (r.sign() <= 0 || s.sign() <= 0)
            throw std::invalid_argument("polydisk: factors must be positive");
        if (s < r) std::swap(r, s);
    }
};

struct Ball {
    Rational a; // capacity (pi times radius squared)

    explicit Ball(Rational a_) : a(a_) {
        if (a.sign() <= 0) throw std::invalid_argument("ball: capacity must be positive");
    }
};

using DomainShape = std::variant<Polydisk, Ball>;

/// Least a with vol(B(a)) >= vol(P(r,s)): vol(B(a)) = a^2/2 and
/// vol(P(r,s)) = r s, so a = sqrt(2 r s).
inline Radical volume_bound(const Polydisk& p) { return Radical(2 * (p.r * p.s)); }

/// P(r,s) embeds into B(r+s) by inclusion.
inline Rational inclusion_bound(const Polydisk& p) { return p.r + p.s; }

/// Folding embeds P(1,s), s > 2, into B(a) for every a > 2 + s/2 (an
/// infimum, not attained). General factors are scaled through r = 1 first.
inline std::optional<Rational> folding_bound(const Polydisk& p) {
    const Rational normalized_s = p.s / p.r;
    if (!(normalized_s > Rational(2))) return std::nullopt;
    return p.r * (2 + normalized_s / Rational(2));
}

/// k-th term of the ball weight sequence (0,1,1,2,2,2,3,3,3,3,...): the
/// value t occupies the positions [t(t+1)/2, (t+1)(t+2)/2).
inline long long ball_weight(long long k) {
    if (k < 0) throw std::invalid_argument("ball_weight: negative index");
    long long t = 0;
    while ((t + 1) * (t + 2) / 2 <= k) ++t;
    return t;
}

/// ECH capacities. Polydisk P(a,b): min{a m + b n : m,n >= 0 integers,
/// (m+1)(n+1) >= k+1}. Ball B(c): c times the weight sequence.
inline Rational ech_capacity(const DomainShape& shape, long long k) {
    if (k < 0) throw std::invalid_argument("ech_capacity: negative index");
    if (std::holds_alternative<Ball>(shape))
        return std::get<Ball>(shape).a * Rational(ball_weight(k));
    const auto& p = std::get<Polydisk>(shape);
    // For fixed m the best n is the least with (m+1)(n+1) >= k+1, and
    // m ranges over [0,k]: at m = k the constraint holds with n = 0.
    std::optional<Rational> best;
    for (long long m = 0; m <= k; ++m) {
        const long long n = (k + m + 1) / (m + 1) - 1; // ceil((k+1)/(m+1)) - 1
        const Rational value = p.r * Rational(m) + p.s * Rational(n);
        if (!best || value < *best) best = value;
    }
    return best ? *best : Rational(0);
}

/// Least a with c_k(B(a)) >= c_k(P) for all 1 <= k <= k_max, i.e. the
/// largest ratio c_k(P)/d_k.
inline Rational ech_bound(const Polydisk& p, long long k_max) {
    if (k_max < 1) throw std::invalid_argument("ech_bound: k_max must be >= 1");
    Rational best(0);
    for (long long k = 1; k <= k_max; ++k) {
        const Rational ratio = ech_capacity(p, k) / Rational(ball_weight(k));
        if (ratio > best) best = ratio;
    }
    return best;
}

} // namespace neckstretch

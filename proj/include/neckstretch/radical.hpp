#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "neckstretch/rational.hpp"

namespace neckstretch {

namespace detail {

inline unsigned __int128 isqrt_u128(unsigned __int128 x) {
    if (x == 0) return 0;
    unsigned __int128 r = 0;
    // start from a floating guess, then settle by Newton steps
    long double g = sqrtl(static_cast<long double>(x));
    r = static_cast<unsigned __int128>(g);
    for (int i = 0; i < 64; ++i) {
        unsigned __int128 next = (r + x / r) / 2;
        if (next >= r) break;
        r = next;
    }
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline std::optional<long long> exact_isqrt(long long x) {
    if (x < 0) return std::nullopt;
    auto r = isqrt_u128(static_cast<unsigned __int128>(x));
    if (r * r == static_cast<unsigned __int128>(x)) return static_cast<long long>(r);
    return std::nullopt;
}

} // namespace detail

/// The square root of a nonnegative rational, kept as the exact radicand.
/// Capacity bounds like sqrt(2rs) stay comparable to rationals without any
/// floating point: sqrt(x) < p/q iff x < (p/q)^2.
class Radical {
  public:
    explicit Radical(Rational radicand) : radicand_(radicand) {
        if (radicand_.sign() < 0) throw std::domain_error("Radical: negative radicand");
    }

    const Rational& radicand() const { return radicand_; }

    /// The exact rational value, when the radicand is a perfect square.
    std::optional<Rational> exact() const {
        auto n = detail::exact_isqrt(radicand_.num());
        auto d = detail::exact_isqrt(radicand_.den());
        if (n && d) return Rational(*n, *d);
        return std::nullopt;
    }

    /// Decimal rendering truncated to `places` digits (default 6).
    std::string decimal(int places = 6) const {
        unsigned __int128 scale = 1;
        for (int i = 0; i < places; ++i) scale *= 10;
        auto p = static_cast<unsigned __int128>(radicand_.num());
        auto q = static_cast<unsigned __int128>(radicand_.den());
        // sqrt(p/q) = sqrt(p*q)/q; floor(sqrt(X)/q) == floor(floor(sqrt X)/q)
        unsigned __int128 digits = detail::isqrt_u128(p * q * scale * scale) / q;
        unsigned __int128 ip = digits / scale, fp = digits % scale;
        std::string frac(places, '0');
        for (int i = places - 1; i >= 0; --i) {
            frac[i] = static_cast<char>('0' + static_cast<int>(fp % 10));
            fp /= 10;
        }
        std::string head;
        if (ip == 0) head = "0";
        while (ip > 0) {
            head.insert(head.begin(), static_cast<char>('0' + static_cast<int>(ip % 10)));
            ip /= 10;
        }
        return places > 0 ? head + "." + frac : head;
    }

    /// "2" when exact, otherwise "sqrt(8)" style.
    std::string str() const {
        if (auto e = exact()) return e->str();
        return "sqrt(" + radicand_.str() + ")";
    }

    friend bool operator==(const Radical& a, const Rational& r) {
        return r.sign() >= 0 && a.radicand_ == r * r;
    }
    friend bool operator<(const Radical& a, const Rational& r) {
        return r.sign() > 0 && a.radicand_ < r * r;
    }
    friend bool operator<(const Rational& r, const Radical& a) {
        return r.sign() < 0 || a.radicand_ > r * r;
    }
    friend bool operator==(const Radical& a, const Radical& b) { return a.radicand_ == b.radicand_; }
    friend bool operator<(const Radical& a, const Radical& b) { return a.radicand_ < b.radicand_; }

  private:
    Rational radicand_;
};

} // namespace neckstretch

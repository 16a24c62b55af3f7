#pragma once

#include <cstdint>
#include <compare>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace neckstretch {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator. All intermediate products go through 128-bit integers and
/// overflow of the reduced result throws std::overflow_error, so arithmetic
/// is either exact or loud.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(long long numerator, long long denominator = 1) { assign(numerator, denominator); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    /// Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p/q", or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p" or "p/q" (optional leading minus). Throws
    /// std::invalid_argument on anything else.
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
        auto parse_int = [&](std::string_view part) -> long long {
            if (part.empty()) bad();
            std::size_t i = 0;
            bool neg = part[0] == '-';
            if (neg) i = 1;
            if (i == part.size()) bad();
            long long v = 0;
            for (; i < part.size(); ++i) {
                if (part[i] < '0' || part[i] > '9') bad();
                if (v > (std::numeric_limits<long long>::max() - 9) / 10)
                    throw std::overflow_error("Rational: literal too large");
                v = v * 10 + (part[i] - '0');
            }
            return neg ? -v : v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

  private:
    using i128 = __int128;

    long long num_ = 0;
    long long den_ = 1;

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    static Rational from_i128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr i128 lo = std::numeric_limits<long long>::min();
        constexpr i128 hi = std::numeric_limits<long long>::max();
        if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

} // namespace neckstretch

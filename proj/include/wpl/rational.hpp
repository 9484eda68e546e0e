#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wpl {

namespace detail {

inline long long checked_ll(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error(what);
    return static_cast<long long>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

/// Exact rational number, always stored reduced with positive denominator.
struct Rational {
    long long num{0};
    long long den{1};

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) { nn = -nn; dd = -dd; }
        __int128 g = detail::gcd128(nn, dd);
        if (g > 1) { nn /= g; dd /= g; }
        num = detail::checked_ll(nn, "rational overflow");
        den = detail::checked_ll(dd, "rational overflow");
    }

    static Rational reduce128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num = detail::checked_ll(n, "rational overflow");
        r.den = detail::checked_ll(d, "rational overflow");
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return reduce128(static_cast<__int128>(a.num) * b.den,
                         static_cast<__int128>(a.den) * b.num);
    }
    Rational operator-() const { Rational r = *this; r.num = -r.num; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num) * b.den;
        __int128 r = static_cast<__int128>(b.num) * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_integer() const { return den == 1; }

    /// Largest integer <= this value.
    long long floor() const {
        if (num >= 0) return num / den;
        return -((-num + den - 1) / den);
    }
};

inline std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

/// Slope of a sheaf class: a reduced rational, or infinity for torsion classes.
class Slope {
public:
    Slope() = default;
    static Slope infinity() { Slope s; s.inf_ = true; return s; }
    static Slope finite(Rational v) { Slope s; s.val_ = v; return s; }
    Slope(Rational v) : val_(v) {}
    Slope(long long n) : val_(Rational(n)) {}

    bool infinite() const { return inf_; }
    const Rational& value() const {
        if (inf_) throw std::domain_error("slope is infinite");
        return val_;
    }

    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.val_ == b.val_;
    }
    /// Order with infinity as the top element.
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.val_ < b.val_;
    }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
    friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

private:
    bool inf_{false};
    Rational val_{};
};

inline std::string to_string(const Slope& s) {
    if (s.infinite()) return "inf";
    return to_string(s.value());
}

Rational parse_rational(const std::string& text);

} // namespace wpl

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "seqring/errors.hpp"

namespace seqring {

/// Arbitrary-precision integer used throughout.
using Int = boost::multiprecision::cpp_int;

namespace detail {

/// gcd of positive operands. The bit-parallel gcd underneath degrades badly
/// on very unbalanced sizes, so a Euclidean step closes any large gap first.
inline Int pos_gcd(Int a, Int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == 1 || b == 1) return Int(1);
    for (;;) {
        if (a < b) a.swap(b);
        if (boost::multiprecision::msb(a) - boost::multiprecision::msb(b) <= 64) break;
        a %= b;
        if (a == 0) return b;
    }
    return boost::multiprecision::gcd(a, b);
}

inline Int abs_of(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace detail

/// Exact rational number. Always reduced: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1. Equality is therefore structural.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw DivisionByZeroError("rational with zero denominator");
        normalize();
    }

    /// Parses "p" or "p/q" with optional leading sign.
    static Rat parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    friend Rat operator-(const Rat& x) { return Rat(-x.num_, x.den_, raw_tag{}); }

    // The operators keep both inputs reduced, which makes the output
    // reduction cheap: only the gcds that can actually be non-trivial are
    // computed, and always on operands of comparable size.

    friend Rat operator+(const Rat& x, const Rat& y) {
        if (x.num_ == 0) return y;
        if (y.num_ == 0) return x;
        if (x.den_ == 1 && y.den_ == 1) return Rat(x.num_ + y.num_, Int(1), raw_tag{});
        if (x.den_ == y.den_) {
            Int t = x.num_ + y.num_;
            if (t == 0) return Rat();
            Int g = detail::pos_gcd(detail::abs_of(t), x.den_);
            if (g == 1) return Rat(std::move(t), x.den_, raw_tag{});
            return Rat(t / g, x.den_ / g, raw_tag{});
        }
        Int g0 = detail::pos_gcd(x.den_, y.den_);
        if (g0 == 1) {
            // coprime denominators of reduced inputs: the sum is reduced
            return Rat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, raw_tag{});
        }
        Int yd = y.den_ / g0;
        Int t = x.num_ * yd + y.num_ * (x.den_ / g0);
        if (t == 0) return Rat();
        Int g = detail::pos_gcd(detail::abs_of(t), g0);
        if (g == 1) return Rat(std::move(t), x.den_ * yd, raw_tag{});
        return Rat(t / g, (x.den_ / g) * yd, raw_tag{});
    }
    friend Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }
    friend Rat operator*(const Rat& x, const Rat& y) {
        if (x.num_ == 0 || y.num_ == 0) return Rat();
        if (x.den_ == 1 && y.den_ == 1) return Rat(x.num_ * y.num_, Int(1), raw_tag{});
        if (x.den_ == 1) {
            if (x.num_ == 1) return y;
            if (x.num_ == -1) return -y;
        }
        if (y.den_ == 1) {
            if (y.num_ == 1) return x;
            if (y.num_ == -1) return -x;
        }
        Int g1 = detail::pos_gcd(detail::abs_of(x.num_), y.den_);
        Int g2 = detail::pos_gcd(detail::abs_of(y.num_), x.den_);
        Int num = (g1 == 1 ? x.num_ : Int(x.num_ / g1)) * (g2 == 1 ? y.num_ : Int(y.num_ / g2));
        Int den = (g2 == 1 ? x.den_ : Int(x.den_ / g2)) * (g1 == 1 ? y.den_ : Int(y.den_ / g1));
        return Rat(std::move(num), std::move(den), raw_tag{});
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num_ == 0) throw DivisionByZeroError("rational division by zero");
        if (x.num_ == 0) return Rat();
        Int g1 = detail::pos_gcd(detail::abs_of(x.num_), detail::abs_of(y.num_));
        Int g2 = detail::pos_gcd(y.den_, x.den_);
        Int num = (x.num_ / g1) * (y.den_ / g2);
        Int den = (x.den_ / g2) * (y.num_ / g1);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rat(std::move(num), std::move(den), raw_tag{});
    }

    Rat& operator+=(const Rat& y) { return *this = *this + y; }
    Rat& operator-=(const Rat& y) { return *this = *this - y; }
    Rat& operator*=(const Rat& y) { return *this = *this * y; }
    Rat& operator/=(const Rat& y) { return *this = *this / y; }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// x^e for e >= 0; negative e inverts first (throws on zero base).
    Rat pow(long long e) const;

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) {
        return os << x.str();
    }

private:
    struct raw_tag {};
    Rat(Int num, Int den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ == 1) return;
        Int g = detail::pos_gcd(detail::abs_of(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    auto check_int = [&](std::string_view part, std::size_t offset) {
        if (part.empty()) throw ParseError("empty number", offset);
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw ParseError("sign without digits", offset);
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw ParseError("invalid digit in number", offset + i);
    };
    if (slash == std::string_view::npos) {
        check_int(text, 0);
        return Rat(Int(std::string(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    check_int(num, 0);
    check_int(den, slash + 1);
    return Rat(Int(std::string(num)), Int(std::string(den)));
}

inline Rat Rat::pow(long long e) const {
    Rat base = *this;
    if (e < 0) {
        base = Rat(1) / base;
        e = -e;
    }
    Rat result(1);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

} // namespace seqring

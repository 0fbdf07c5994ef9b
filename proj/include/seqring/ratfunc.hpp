#pragma once

#include "seqring/poly.hpp"

namespace seqring {

// Reduced fraction of polynomials over Q. Canonical form: gcd(num, den) = 1,
// den monic and non-zero; the zero function is 0/1. Equality is structural.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}
    RatFunc(int constant) : RatFunc(Rat(constant)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc z() { return RatFunc(Poly::z()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // Value at z = i; throws PoleError when the denominator vanishes there.
    Rat eval(const Rat& point) const;
    Rat eval_at(long long i) const { return eval(Rat(i)); }

    // h(z + t), canonical.
    RatFunc shifted(long long t) const;

    RatFunc pow(long long e) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& h) {
        return os << h.str();
    }

private:
    Poly num_;
    Poly den_;
    void reduce();
};

} // namespace seqring

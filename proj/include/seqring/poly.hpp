#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "seqring/rat.hpp"

namespace seqring {

/// Dense univariate polynomial in z over the rationals. Coefficient i is the
/// coefficient of z^i; the highest stored coefficient is non-zero, so the
/// zero polynomial stores nothing and reports degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& constant);
    Poly(int constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    /// The monomial z.
    static Poly z();
    static Poly monomial(const Rat& c, std::size_t e);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of z^i (zero beyond the degree).
    const Rat& coeff(std::size_t i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    friend Poly operator-(const Poly& p);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;

    Rat eval(const Rat& x) const;

    /// p(z + t) for an integer shift t.
    Poly shifted(long long t) const;

    /// Quotient and remainder of division by d (d != 0).
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient. Zero stays zero.
    Poly primitive_part() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        return os << p.str();
    }

private:
    void trim();
    std::vector<Rat> c_;
};

/// Exactly the integer roots of p, ascending. Uses the rational-root divisor
/// test on the primitive integer form, with powers of z stripped first.
/// Throws ZeroPolynomialError for p = 0.
std::vector<Int> poly_integer_roots(const Poly& p);

} // namespace seqring

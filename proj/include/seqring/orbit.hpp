#pragma once

#include "seqring/sequence.hpp"

#include <map>

namespace seqring {

// Power product of the matrix variables Z[i][j], 1-based, no z part (the z
// coordinate lives in the coefficients). Ordered lexicographically with
// earlier variables dominant, so the diagonal product leads a determinant.
class Monomial {
public:
    using Var = std::pair<unsigned, unsigned>;

    Monomial() = default;
    static Monomial variable(unsigned i, unsigned j);

    const std::map<Var, unsigned>& exponents() const { return e_; }
    bool is_one() const { return e_.empty(); }
    unsigned total_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;

    bool operator<(const Monomial& o) const;
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    std::string str() const;

private:
    std::map<Var, unsigned> e_;
};

// A point (b, B) of the affine-line x invertible-matrices space.
struct OrbitState {
    OrbitState(std::int64_t b_, QMatrix B_);
    std::int64_t b;
    QMatrix B;
};

// poly / det(Z)^detPower with poly a k(z)-combination of Monomials, the
// coordinate ring of the space acted on by (b,B) -> (b+1, A(b)B).
// Constructors canonicalize: zero coefficients are dropped and det(Z) factors
// are divided out of the poly part while detPower allows (best effort).
class RegularFunction {
public:
    RegularFunction() = default;
    explicit RegularFunction(std::size_t n) : n_(n) {}

    static RegularFunction constant(std::size_t n, RatFunc c);
    // The coefficient z itself (a degree-0 term with coefficient z).
    static RegularFunction z_coord(std::size_t n);
    static RegularFunction variable(std::size_t n, unsigned i, unsigned j);
    static RegularFunction det_z(std::size_t n);
    static RegularFunction det_z_inverse(std::size_t n, unsigned power);

    std::size_t dim() const { return n_; }
    unsigned det_power() const { return det_power_; }
    const std::map<Monomial, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    RegularFunction operator-() const;
    friend RegularFunction operator+(const RegularFunction& a, const RegularFunction& b);
    friend RegularFunction operator-(const RegularFunction& a, const RegularFunction& b);
    friend RegularFunction operator*(const RegularFunction& a, const RegularFunction& b);
    RegularFunction& operator+=(const RegularFunction& o) { return *this = *this + o; }
    RegularFunction& operator-=(const RegularFunction& o) { return *this = *this - o; }
    RegularFunction& operator*=(const RegularFunction& o) { return *this = *this * o; }
    RegularFunction scaled(const RatFunc& c) const;
    RegularFunction pow(unsigned e) const;

    friend bool operator==(const RegularFunction& a, const RegularFunction& b) = default;

    // poly(b, B) / det(B)^detPower; PoleError if a coefficient is undefined
    // at z = b.
    Rat evaluate(const OrbitState& x) const;
    // Same with det(B) supplied by a caller that already knows it.
    Rat evaluate(const OrbitState& x, const Rat& det_b) const;
    // The poly part alone. det(B)^detPower never vanishes on an orbit state,
    // so this already decides whether the function vanishes at x.
    Rat poly_value(const OrbitState& x) const;

    std::string poly_str() const; // the poly part, reparseable
    std::string str() const;      // poly together with the det(Z) factor

    // Access for construction paths that assemble terms directly.
    static RegularFunction from_terms(std::size_t n, std::map<Monomial, RatFunc> terms,
                                      unsigned det_power);

private:
    std::size_t n_ = 0;
    std::map<Monomial, RatFunc> terms_;
    unsigned det_power_ = 0;
    void canonicalize();
};

// Polynomial grammar over z, Z[i][j] and detZ; a negative exponent is only
// allowed on detZ. ParseError carries the offset.
RegularFunction parse_regular(std::string_view text, std::size_t n);

// Closed set cut out by finitely many regular functions.
struct Subvariety {
    explicit Subvariety(std::vector<RegularFunction> gens);
    std::vector<RegularFunction> generators;
};

// One application of (b,B) -> (b+1, A(b)B); UndefinedOrbitError when an entry
// of A has a pole at b or A(b) is singular.
OrbitState orbit_step(const LinSystem& a, const OrbitState& x);

// States x, sigma(x), ..., sigma^{horizon - b}(x); the last state need not
// admit a further step. UndefinedOrbitError names the failing index.
std::vector<OrbitState> orbit_trace(const LinSystem& a, const OrbitState& x,
                                    std::int64_t horizon);

// Largest m <= horizon with x, sigma(x), ..., sigma^m(x) all inside the
// domain of definition; -1 when x itself is already outside.
std::int64_t orbit_defined_prefix(const LinSystem& a, const OrbitState& x, std::int64_t horizon);

// The window of psi(f): value f(sigma^{i-b}(x)) at position i, b <= i <= horizon.
ExactSeq evaluate_along_orbit(const RegularFunction& f, const LinSystem& a, const OrbitState& x,
                              std::int64_t horizon);

// {i in [b, horizon] : every generator vanishes at sigma^{i-b}(x)}.
std::set<std::uint64_t> orbit_membership_set(const LinSystem& a, const OrbitState& x,
                                             const Subvariety& y, std::int64_t horizon);

// z -> z + 1 on coefficients and Z -> A(z) Z on the matrix variables, scaled
// by det(A)^{-detPower}; satisfies psi(sigma f) = sigma(psi f) along orbits.
RegularFunction sigma_action(const RegularFunction& f, const LinSystem& a);

// Entry-wise A(z + b).
LinSystem rebase(const LinSystem& a, std::int64_t b);

// Generators shifted by b to pair with rebase.
Subvariety rebase_subvariety(const Subvariety& y, std::int64_t b);

// f with every coefficient shifted by t.
RegularFunction shift_coefficients(const RegularFunction& f, std::int64_t t);

} // namespace seqring

#pragma once

#include "seqring/apset.hpp"
#include "seqring/equation.hpp"
#include "seqring/orbit.hpp"

#include <random>

namespace testutil {

using namespace seqring;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
    return Rat(Int(rand_int(rng, -num_range, num_range)), Int(rand_int(rng, 1, den_range)));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
    Rat r = random_rat(rng, num_range, den_range);
    return r.is_zero() ? Rat(1) : r;
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree, int coeff_range = 5) {
    int d = rand_int(rng, 0, max_degree);
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.push_back(Rat(rand_int(rng, -coeff_range, coeff_range)));
    return Poly(std::move(c));
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, int max_degree, int coeff_range = 5) {
    Poly p = random_poly(rng, max_degree, coeff_range);
    return p.is_zero() ? Poly(Rat(1)) : p;
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, int max_degree = 2, int coeff_range = 5) {
    return RatFunc(random_poly(rng, max_degree, coeff_range),
                   random_nonzero_poly(rng, max_degree, coeff_range));
}

inline APSet random_canonical_apset(std::mt19937_64& rng, std::uint64_t max_modulus = 12,
                                    std::uint64_t max_threshold = 50) {
    APSet raw;
    raw.modulus = static_cast<std::uint64_t>(
        rand_int(rng, 1, static_cast<int>(max_modulus)));
    for (std::uint64_t r = 0; r < raw.modulus; ++r) {
        if (rand_int(rng, 0, 1)) raw.residues.insert(r);
    }
    raw.threshold =
        static_cast<std::uint64_t>(rand_int(rng, 0, static_cast<int>(max_threshold)));
    for (std::uint64_t i = 0; i < raw.threshold; ++i) {
        if (rand_int(rng, 0, 3) == 0) raw.sporadic.insert(i);
    }
    return ap_canonicalize(raw);
}

// h_0 a non-zero constant, h_1..h_{n-1} polynomials: the coefficient shape
// whose companion matrix has polynomial entries and constant determinant.
inline Equation random_bell_equation(std::mt19937_64& rng, std::size_t order, int max_degree,
                                     int coeff_range = 5) {
    std::vector<RatFunc> h;
    int c0 = rand_int(rng, -coeff_range, coeff_range);
    if (c0 == 0) c0 = 1;
    h.emplace_back(Rat(c0));
    for (std::size_t j = 1; j < order; ++j) {
        h.emplace_back(random_poly(rng, max_degree, coeff_range));
    }
    return Equation(order, std::move(h));
}

inline QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int coeff_range = 4) {
    while (true) {
        QMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = Rat(rand_int(rng, -coeff_range, coeff_range));
            }
        }
        if (!m.det().is_zero()) return m;
    }
}

// The relation of e with denominators cleared, checked at every stored index.
// Unlike equation_satisfied this never hits a coefficient pole.
inline bool satisfies_cleared(const Equation& e, const ExactSeq& f) {
    std::size_t n = e.order;
    Poly lead(Rat(1));
    for (const RatFunc& h : e.coeffs) lead = lead * h.den();
    std::vector<Poly> p;
    for (std::size_t j = 0; j < n; ++j) {
        Poly pj = e.coeffs[j].num();
        for (std::size_t k = 0; k < n; ++k) {
            if (k != j) pj = pj * e.coeffs[k].den();
        }
        p.push_back(std::move(pj));
    }
    for (std::int64_t i = f.start; i + static_cast<std::int64_t>(n) <= f.end(); ++i) {
        Rat at{Int(i)};
        Rat acc = lead.eval(at) * f.at(i + static_cast<std::int64_t>(n));
        for (std::size_t j = 0; j < n; ++j) {
            acc += p[j].eval(at) * f.at(i + static_cast<std::int64_t>(j));
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

inline RegularFunction random_regular(std::mt19937_64& rng, std::size_t n,
                                      unsigned max_total_degree = 2, unsigned max_det_power = 1,
                                      int terms = 4) {
    RegularFunction f(n);
    for (int t = 0; t < terms; ++t) {
        unsigned deg = static_cast<unsigned>(rand_int(rng, 0, static_cast<int>(max_total_degree)));
        RegularFunction term = RegularFunction::constant(
            n, RatFunc(random_poly(rng, 1, 3), Poly(Rat(1))));
        for (unsigned k = 0; k < deg; ++k) {
            unsigned i = static_cast<unsigned>(rand_int(rng, 1, static_cast<int>(n)));
            unsigned j = static_cast<unsigned>(rand_int(rng, 1, static_cast<int>(n)));
            term *= RegularFunction::variable(n, i, j);
        }
        f += term;
    }
    unsigned m = static_cast<unsigned>(rand_int(rng, 0, static_cast<int>(max_det_power)));
    if (m > 0) f *= RegularFunction::det_z_inverse(n, m);
    return f;
}

} // namespace testutil

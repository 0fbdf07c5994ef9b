#pragma once

#include "seqring/linalg.hpp"
#include "seqring/ratfunc.hpp"

#include <vector>

namespace seqring {

// sigma^n(y) + h_{n-1} sigma^{n-1}(y) + ... + h_0 y = 0 with h_j in k(z).
// h_0 must be non-zero; order-reducible equations are rejected, not reduced.
struct Equation {
    Equation(std::size_t order, std::vector<RatFunc> coeffs);

    std::size_t order;
    std::vector<RatFunc> coeffs; // h_0, ..., h_{n-1}

    friend bool operator==(const Equation& a, const Equation& b) = default;
    std::string str() const;
};

// Square matrix over k(z).
class MatK {
public:
    MatK() = default;
    explicit MatK(std::size_t n) : n_(n), e_(n * n) {}
    static MatK identity(std::size_t n);

    std::size_t dim() const { return n_; }
    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend MatK operator*(const MatK& a, const MatK& b);
    RatFunc det() const;

    friend bool operator==(const MatK& a, const MatK& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<RatFunc> e_;
};

// A with det(A) != 0 in k(z); the determinant is computed once on wrap.
class LinSystem {
public:
    explicit LinSystem(MatK A);

    const MatK& A() const { return a_; }
    std::size_t dim() const { return a_.dim(); }
    const RatFunc& det() const { return det_; }

    friend bool operator==(const LinSystem& a, const LinSystem& b) {
        return a.a_ == b.a_;
    }

private:
    MatK a_;
    RatFunc det_;
};

// A(E): superdiagonal ones, last row (-h_0, ..., -h_{n-1}).
LinSystem companion_matrix(const Equation& e);

// h_1..h_{n-1} polynomial and h_0 a non-zero constant.
bool is_bell_case_equation(const Equation& e);
// All entries polynomial and det a non-zero constant.
bool is_bell_case_system(const MatK& a);

// Entry-wise value of A at z = i; throws PoleError if any entry is undefined.
QMatrix matk_eval(const MatK& a, long long i);

// Entry-wise shift A(z + t).
MatK matk_shift(const MatK& a, long long t);

} // namespace seqring

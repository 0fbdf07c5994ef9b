#pragma once

#include "seqring/rat.hpp"

#include <vector>

namespace seqring {

// Dense square matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(std::size_t n) : n_(n), e_(n * n) {}
    static QMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    Rat det() const;
    // Gauss-Jordan inverse; throws SingularMatrixError on rank deficiency.
    QMatrix inverse() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<Rat> e_;
};

// Basis of {x : rows * x = 0}, computed by fraction-free (Bareiss)
// elimination over the integers after clearing denominators. The basis is the
// reduced-echelon one: each vector carries 1 at its own free column and 0 at
// the other free columns, so the result is deterministic.
std::vector<std::vector<Rat>> kernel_basis(const std::vector<std::vector<Rat>>& rows,
                                           std::size_t ncols);

} // namespace seqring

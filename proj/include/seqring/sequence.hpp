#pragma once

#include "seqring/apset.hpp"
#include "seqring/equation.hpp"

#include <optional>

namespace seqring {

// Exact values on the index window [start, start + values.size() - 1].
// Sequence identities are only ever asserted on such finite windows; that is
// the computable surrogate for "agrees for all large i".
struct ExactSeq {
    std::int64_t start = 0;
    std::vector<Rat> values;
    std::string provenance;

    std::int64_t end() const { return start + static_cast<std::int64_t>(values.size()) - 1; }
    bool defined_at(std::int64_t i) const { return i >= start && i <= end(); }
    const Rat& at(std::int64_t i) const { return values[static_cast<std::size_t>(i - start)]; }
};

// Y(i0) = seed (identity by default), Y(i+1) = A(i) Y(i), stored on [i0, H].
struct FundMatrix {
    LinSystem system;
    std::int64_t i0 = 0;
    std::vector<QMatrix> Y;

    std::int64_t end() const { return i0 + static_cast<std::int64_t>(Y.size()) - 1; }
    const QMatrix& at(std::int64_t i) const { return Y[static_cast<std::size_t>(i - i0)]; }
};

// Least i0 >= 0 past every pole of an entry and every integer zero of det(A).
std::int64_t start_index(const LinSystem& a);

FundMatrix fundamental_matrix(const LinSystem& a, std::int64_t horizon,
                              const std::optional<QMatrix>& seed = std::nullopt);

// Runs the scalar recursion from `init` (one value per order) placed at s.
ExactSeq solve_equation(const Equation& e, const std::vector<Rat>& init, std::int64_t s,
                        std::int64_t horizon);

// True iff the relation of e holds at every index where all terms are stored.
bool equation_satisfied(const Equation& e, const ExactSeq& f);

// C with Y2(i) = Y1(i) C on the whole overlap; NotConstantError on any
// disagreement (which a pair of true fundamental matrices can never produce).
QMatrix constant_transition(const FundMatrix& y1, const FundMatrix& y2);

// v with (f(i), ..., f(i+n-1))^t = Y(i) v, verified on the whole overlap.
std::vector<Rat> solution_coordinates(const ExactSeq& f, const FundMatrix& y);

ExactSeq indicator_sequence(const APSet& s, std::int64_t start, std::int64_t horizon);

ExactSeq seq_add(const ExactSeq& f, const ExactSeq& g);
ExactSeq seq_mul(const ExactSeq& f, const ExactSeq& g);
// Left shift: result(i) = f(i + t); the window moves down, clamped at 0.
ExactSeq seq_shift(const ExactSeq& f, std::int64_t t);

ExactSeq entry_sequence(const FundMatrix& y, std::size_t r, std::size_t c);
// det Y(i), built incrementally from det Y(i0) and det A(i).
ExactSeq det_sequence(const FundMatrix& y);

} // namespace seqring

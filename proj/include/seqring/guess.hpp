#pragma once

#include "seqring/equation.hpp"
#include "seqring/sequence.hpp"

#include <optional>

namespace seqring {

// Searches for polynomials c_0..c_o (degree <= max_degree, order o <=
// max_order, smallest order first, then smallest degree) with
//   sum_j c_j(i) f(i+j) = 0
// on the whole window, fitting on an initial segment and validating on a
// held-out tail of max(10, 2*(max_order+max_degree)) relations. Returns the
// equation with h_j = c_j/c_o, or nullopt when no relation fits the bounds.
std::optional<Equation> guess_recurrence(const ExactSeq& f, std::size_t max_order,
                                         std::size_t max_degree);

} // namespace seqring

#pragma once

#include "seqring/sequence.hpp"

namespace seqring {

enum class DecompStatus { ExactFinite, Conjectured, Inconclusive };

std::string status_name(DecompStatus s);

struct Decomposition {
    APSet set;
    DecompStatus status = DecompStatus::Inconclusive;
    std::int64_t window_lo = 0; // verified range [window_lo, window_hi]
    std::int64_t window_hi = 0;
};

// Indices in [start, end] where the value is exactly zero.
std::set<std::uint64_t> zero_set(const ExactSeq& f);

// Fits the least modulus <= max_period whose residue rule explains the zeros
// on the last `window` indices, extends the threshold backward while the rule
// keeps matching, and records earlier zeros as sporadic. Statuses:
// exact-finite (no zeros in the window), conjectured (a modulus fits),
// inconclusive (none does; the observed zeros are returned as a finite set).
// The returned set matches the observed zeros exactly on the whole range.
Decomposition decompose_zero_set(const ExactSeq& f, std::uint64_t max_period,
                                 std::uint64_t window);

// Same fitting as decompose_zero_set for a plain point set observed on
// [lo, hi] (used for orbit membership sets).
Decomposition decompose_point_set(const std::set<std::uint64_t>& points, std::int64_t lo,
                                  std::int64_t hi, std::uint64_t max_period,
                                  std::uint64_t window);

struct PeriodWitness {
    std::string name;
    APSet set;
    DecompStatus status = DecompStatus::Conjectured;
};

struct PeriodBound {
    std::uint64_t bound = 1;
    std::vector<PeriodWitness> witnesses; // candidates with periodic tails (modulus >= 2)
    std::size_t candidates_checked = 0;
};

// Empirical lower bound for the number of idempotents permuted by the shift:
// decomposes the zero set of every fundamental-matrix entry, of det Y, of
// entry monomials up to the given total degree, and of value-shifted copies
// g - v of any candidate g whose values repeat with a small period; returns
// the lcm of the conjectured tail moduli together with the witnesses.
PeriodBound pv_period_lower_bound(const LinSystem& a, std::size_t degree_bound,
                                  std::int64_t horizon, std::uint64_t max_period = 60,
                                  std::uint64_t window = 400);

// True iff every tail modulus divides l.
bool verify_period_bound(const std::vector<APSet>& decompositions, std::uint64_t l);

} // namespace seqring

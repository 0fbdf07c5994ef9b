#pragma once

#include <cstdint>
#include <set>
#include <string>

namespace seqring {

// Eventually periodic subset of the naturals: i is a member iff
// (i < threshold and i in sporadic) or (i >= threshold and i mod modulus in
// residues). Canonical form has the least modulus whose tail rule matches and
// the least threshold; then equality of sets is equality of fields.
struct APSet {
    std::uint64_t threshold = 0;
    std::uint64_t modulus = 1;
    std::set<std::uint64_t> residues;
    std::set<std::uint64_t> sporadic;

    friend bool operator==(const APSet& a, const APSet& b) = default;
};

bool ap_member(const APSet& s, std::uint64_t i);

APSet ap_canonicalize(const APSet& raw);
APSet ap_intersect(const APSet& s1, const APSet& s2);
APSet ap_union(const APSet& s1, const APSet& s2);
APSet ap_complement(const APSet& s);
bool ap_equal_mod_finite(const APSet& s1, const APSet& s2);

APSet ap_empty();
APSet ap_all();
// {first, first + period, first + 2*period, ...}
APSet ap_progression(std::uint64_t first, std::uint64_t period);
APSet ap_finite(const std::set<std::uint64_t>& points);

bool ap_is_finite(const APSet& s);

std::string ap_str(const APSet& s);

} // namespace seqring

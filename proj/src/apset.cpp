#include "seqring/apset.hpp"

#include <numeric>
#include <sstream>

namespace seqring {

namespace {

bool raw_member(const APSet& s, std::uint64_t i) {
    if (i < s.threshold) return s.sporadic.count(i) > 0;
    return s.residues.count(i % s.modulus) > 0;
}

} // namespace

bool ap_member(const APSet& s, std::uint64_t i) { return raw_member(s, i); }

APSet ap_canonicalize(const APSet& raw) {
    APSet in = raw;
    if (in.modulus == 0) in.modulus = 1;
    {
        std::set<std::uint64_t> fixed;
        for (std::uint64_t r : in.residues) fixed.insert(r % in.modulus);
        in.residues = std::move(fixed);
    }

    // Least divisor of the modulus whose shift leaves the residue set fixed.
    std::uint64_t l = in.modulus;
    for (std::uint64_t d = 1; d <= in.modulus; ++d) {
        if (in.modulus % d != 0) continue;
        bool periodic = true;
        for (std::uint64_t r = 0; r < in.modulus && periodic; ++r) {
            if (in.residues.count(r) != in.residues.count((r + d) % in.modulus)) periodic = false;
        }
        if (periodic) {
            l = d;
            break;
        }
    }
    std::set<std::uint64_t> res;
    for (std::uint64_t r : in.residues) res.insert(r % l);

    // Least threshold at which the tail rule already holds.
    std::uint64_t n0 = in.threshold;
    while (n0 > 0 && raw_member(in, n0 - 1) == (res.count((n0 - 1) % l) > 0)) --n0;

    APSet out;
    out.modulus = l;
    out.residues = std::move(res);
    out.threshold = n0;
    for (std::uint64_t i = 0; i < n0; ++i) {
        if (raw_member(in, i)) out.sporadic.insert(i);
    }
    return out;
}

namespace {

APSet combine(const APSet& s1, const APSet& s2, bool (*op)(bool, bool)) {
    APSet raw;
    raw.modulus = std::lcm(s1.modulus, s2.modulus);
    raw.threshold = std::max(s1.threshold, s2.threshold);
    for (std::uint64_t r = 0; r < raw.modulus; ++r) {
        if (op(s1.residues.count(r % s1.modulus) > 0, s2.residues.count(r % s2.modulus) > 0)) {
            raw.residues.insert(r);
        }
    }
    for (std::uint64_t i = 0; i < raw.threshold; ++i) {
        if (op(raw_member(s1, i), raw_member(s2, i))) raw.sporadic.insert(i);
    }
    return ap_canonicalize(raw);
}

} // namespace

APSet ap_intersect(const APSet& s1, const APSet& s2) {
    return combine(s1, s2, +[](bool a, bool b) { return a && b; });
}

APSet ap_union(const APSet& s1, const APSet& s2) {
    return combine(s1, s2, +[](bool a, bool b) { return a || b; });
}

APSet ap_complement(const APSet& s) {
    APSet raw;
    raw.modulus = s.modulus;
    raw.threshold = s.threshold;
    for (std::uint64_t r = 0; r < s.modulus; ++r) {
        if (s.residues.count(r) == 0) raw.residues.insert(r);
    }
    for (std::uint64_t i = 0; i < s.threshold; ++i) {
        if (!raw_member(s, i)) raw.sporadic.insert(i);
    }
    return ap_canonicalize(raw);
}

bool ap_equal_mod_finite(const APSet& s1, const APSet& s2) {
    APSet a = ap_canonicalize(s1);
    APSet b = ap_canonicalize(s2);
    return a.modulus == b.modulus && a.residues == b.residues;
}

APSet ap_empty() { return APSet{}; }

APSet ap_all() {
    APSet s;
    s.residues.insert(0);
    return s;
}

APSet ap_progression(std::uint64_t first, std::uint64_t period) {
    APSet raw;
    raw.threshold = first;
    raw.modulus = period == 0 ? 1 : period;
    raw.residues.insert(first % raw.modulus);
    return ap_canonicalize(raw);
}

APSet ap_finite(const std::set<std::uint64_t>& points) {
    APSet raw;
    raw.sporadic = points;
    raw.threshold = points.empty() ? 0 : *points.rbegin() + 1;
    return ap_canonicalize(raw);
}

bool ap_is_finite(const APSet& s) { return ap_canonicalize(s).residues.empty(); }

std::string ap_str(const APSet& s) {
    APSet c = ap_canonicalize(s);
    std::ostringstream os;
    bool first = true;
    for (std::uint64_t i : c.sporadic) {
        os << (first ? "{" : ", ") << i;
        first = false;
    }
    if (!first) os << "}";
    for (std::uint64_t r : c.residues) {
        // First progression member at or past the threshold.
        std::uint64_t start = c.threshold + (r + c.modulus - c.threshold % c.modulus) % c.modulus;
        if (!first) os << " u ";
        os << start << " + " << c.modulus << "N";
        first = false;
    }
    if (first) os << "{}";
    return os.str();
}

} // namespace seqring

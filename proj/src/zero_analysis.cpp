#include "seqring/zero_analysis.hpp"

#include "seqring/errors.hpp"

#include <numeric>

namespace seqring {

std::string status_name(DecompStatus s) {
    switch (s) {
        case DecompStatus::ExactFinite: return "exact-finite";
        case DecompStatus::Conjectured: return "conjectured";
        case DecompStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::set<std::uint64_t> zero_set(const ExactSeq& f) {
    std::set<std::uint64_t> zs;
    for (std::int64_t i = std::max<std::int64_t>(f.start, 0); i <= f.end(); ++i) {
        if (f.at(i).is_zero()) zs.insert(static_cast<std::uint64_t>(i));
    }
    return zs;
}

Decomposition decompose_zero_set(const ExactSeq& f, std::uint64_t max_period,
                                 std::uint64_t window) {
    if (f.start < 0) throw WindowTooSmallError("sequence must start at a natural index");
    std::uint64_t start = static_cast<std::uint64_t>(f.start);
    std::uint64_t h = static_cast<std::uint64_t>(f.end());
    if (max_period < 1 || window < 2 * max_period) {
        throw WindowTooSmallError("verification window must cover twice the maximal period");
    }
    if (h - start < 4 * window) {
        throw WindowTooSmallError("horizon must cover four verification windows");
    }

    std::set<std::uint64_t> zeros = zero_set(f);
    std::uint64_t wlo = h - window;

    Decomposition out;
    out.window_lo = f.start;
    out.window_hi = f.end();

    bool any_in_window = false;
    for (auto it = zeros.lower_bound(wlo); it != zeros.end(); ++it) {
        any_in_window = true;
        break;
    }
    if (!any_in_window) {
        out.set = ap_finite(zeros);
        out.status = DecompStatus::ExactFinite;
        return out;
    }

    for (std::uint64_t l = 1; l <= max_period; ++l) {
        // Residue classes must be all-zero or zero-free across the window.
        std::vector<int> verdict(l, -1);
        bool ok = true;
        for (std::uint64_t i = wlo; i <= h && ok; ++i) {
            int z = zeros.count(i) ? 1 : 0;
            int& v = verdict[i % l];
            if (v == -1) {
                v = z;
            } else if (v != z) {
                ok = false;
            }
        }
        if (!ok) continue;

        std::set<std::uint64_t> residues;
        for (std::uint64_t r = 0; r < l; ++r) {
            if (verdict[r] == 1) residues.insert(r);
        }
        std::uint64_t n0 = wlo;
        while (n0 > start && (zeros.count(n0 - 1) > 0) == (residues.count((n0 - 1) % l) > 0)) {
            --n0;
        }
        APSet raw;
        raw.modulus = l;
        raw.residues = std::move(residues);
        raw.threshold = n0;
        for (auto it = zeros.begin(); it != zeros.end() && *it < n0; ++it) raw.sporadic.insert(*it);
        out.set = ap_canonicalize(raw);
        out.status = DecompStatus::Conjectured;
        return out;
    }

    out.set = ap_finite(zeros);
    out.status = DecompStatus::Inconclusive;
    return out;
}

Decomposition decompose_point_set(const std::set<std::uint64_t>& points, std::int64_t lo,
                                  std::int64_t hi, std::uint64_t max_period,
                                  std::uint64_t window) {
    ExactSeq f{lo, {}, "point set"};
    f.values.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (std::int64_t i = lo; i <= hi; ++i) {
        f.values.push_back(points.count(static_cast<std::uint64_t>(i)) ? Rat(0) : Rat(1));
    }
    return decompose_zero_set(f, max_period, window);
}

namespace {

std::string shifted_name(const std::string& base, const Rat& v) {
    if (v.num() < 0) return base + " + " + (-v).str();
    return base + " - " + v.str();
}

} // namespace

PeriodBound pv_period_lower_bound(const LinSystem& a, std::size_t degree_bound,
                                  std::int64_t horizon, std::uint64_t max_period,
                                  std::uint64_t window) {
    if (degree_bound < 1) throw WindowTooSmallError("degree bound must be at least 1");
    FundMatrix y = fundamental_matrix(a, horizon);
    std::size_t n = a.dim();

    std::vector<ExactSeq> base;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) base.push_back(entry_sequence(y, i, j));
    }
    base.push_back(det_sequence(y));

    // Entry monomials of total degree 2..degree_bound.
    std::vector<ExactSeq> candidates = base;
    std::vector<std::pair<std::size_t, ExactSeq>> frontier;
    for (std::size_t e = 0; e < n * n; ++e) frontier.emplace_back(e, base[e]);
    for (std::size_t d = 2; d <= degree_bound; ++d) {
        std::vector<std::pair<std::size_t, ExactSeq>> next;
        for (const auto& [lo, seq] : frontier) {
            for (std::size_t e = lo; e < n * n; ++e) {
                ExactSeq prod = seq_mul(seq, base[e]);
                prod.provenance = seq.provenance + "*" + base[e].provenance;
                candidates.push_back(prod);
                next.emplace_back(e, std::move(prod));
            }
        }
        frontier = std::move(next);
    }

    PeriodBound out;
    auto absorb = [&out](const std::string& name, const Decomposition& dec) {
        if (dec.status != DecompStatus::Conjectured) return;
        APSet c = ap_canonicalize(dec.set);
        if (c.residues.empty() || c.modulus < 2) return;
        out.bound = std::lcm(out.bound, c.modulus);
        out.witnesses.push_back({name, c, dec.status});
    };

    for (const ExactSeq& g : candidates) {
        ++out.candidates_checked;
        absorb(g.provenance, decompose_zero_set(g, max_period, window));

        // A candidate whose values repeat with period p contributes the
        // level sets of each non-zero value as further candidates g - v.
        std::uint64_t h = static_cast<std::uint64_t>(g.end());
        std::uint64_t wlo = h - window;
        for (std::uint64_t p = 1; p <= max_period; ++p) {
            bool periodic = true;
            for (std::uint64_t i = wlo; i + p <= h && periodic; ++i) {
                if (!(g.at(static_cast<std::int64_t>(i)) ==
                      g.at(static_cast<std::int64_t>(i + p)))) {
                    periodic = false;
                }
            }
            if (!periodic) continue;
            std::vector<Rat> values;
            for (std::uint64_t i = wlo; i < wlo + p; ++i) {
                Rat v = g.at(static_cast<std::int64_t>(i));
                if (v.is_zero()) continue;
                bool seen = false;
                for (const Rat& u : values) seen = seen || u == v;
                if (!seen) values.push_back(std::move(v));
            }
            for (const Rat& v : values) {
                ExactSeq shifted = g;
                for (Rat& x : shifted.values) x = x - v;
                ++out.candidates_checked;
                absorb(shifted_name(g.provenance, v), decompose_zero_set(shifted, max_period, window));
            }
            break;
        }
    }
    return out;
}

bool verify_period_bound(const std::vector<APSet>& decompositions, std::uint64_t l) {
    if (l == 0) return false;
    for (const APSet& s : decompositions) {
        APSet c = ap_canonicalize(s);
        if (c.residues.empty()) continue;
        if (l % c.modulus != 0) return false;
    }
    return true;
}

} // namespace seqring

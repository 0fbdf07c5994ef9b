#include "seqring/guess.hpp"

#include "seqring/errors.hpp"

namespace seqring {

namespace {

// c_j read off a flat unknown vector laid out as [j*(deg+1) + t] -> z^t.
Poly coeff_poly(const std::vector<Rat>& w, std::size_t j, std::size_t deg) {
    std::vector<Rat> c(w.begin() + static_cast<long>(j * (deg + 1)),
                       w.begin() + static_cast<long>((j + 1) * (deg + 1)));
    return Poly(std::move(c));
}

bool relation_holds(const std::vector<Poly>& c, const ExactSeq& f, std::size_t order) {
    for (std::int64_t i = f.start; i + static_cast<std::int64_t>(order) <= f.end(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j <= order; ++j) {
            const Rat& v = f.at(i + static_cast<std::int64_t>(j));
            if (!v.is_zero() && !c[j].is_zero()) acc += c[j].eval(Rat(i)) * v;
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

} // namespace

std::optional<Equation> guess_recurrence(const ExactSeq& f, std::size_t max_order,
                                         std::size_t max_degree) {
    if (max_order < 1) throw InsufficientDataError("max_order must be at least 1");
    std::size_t len = f.values.size();
    std::size_t held = std::max<std::size_t>(10, 2 * (max_order + max_degree));
    std::size_t need = (max_order + 1) * (max_degree + 1) + max_order + held;
    if (len < need) {
        throw InsufficientDataError("need at least " + std::to_string(need) + " values, got " +
                                    std::to_string(len));
    }

    for (std::size_t o = 1; o <= max_order; ++o) {
        std::size_t relations = len - o; // usable relation indices f.start .. f.start+relations-1
        std::size_t fit_count = relations - held;
        for (std::size_t deg = 0; deg <= max_degree; ++deg) {
            std::size_t unknowns = (o + 1) * (deg + 1);

            auto row_at = [&](std::int64_t i) {
                std::vector<Rat> row(unknowns);
                for (std::size_t j = 0; j <= o; ++j) {
                    const Rat& v = f.at(i + static_cast<std::int64_t>(j));
                    if (v.is_zero()) continue;
                    Rat p(1);
                    for (std::size_t t = 0; t <= deg; ++t) {
                        row[j * (deg + 1) + t] = p * v;
                        p = p * Rat(i);
                    }
                }
                return row;
            };

            std::vector<std::vector<Rat>> fit;
            fit.reserve(fit_count);
            for (std::size_t k = 0; k < fit_count; ++k) {
                fit.push_back(row_at(f.start + static_cast<std::int64_t>(k)));
            }
            std::vector<std::vector<Rat>> k1 = kernel_basis(fit, unknowns);
            if (k1.empty()) continue;

            // Constrain the held-out relations inside the fitted kernel.
            std::vector<std::vector<Rat>> held_rows;
            held_rows.reserve(held);
            for (std::size_t k = fit_count; k < relations; ++k) {
                std::vector<Rat> row = row_at(f.start + static_cast<std::int64_t>(k));
                std::vector<Rat> in_kernel(k1.size());
                for (std::size_t s = 0; s < k1.size(); ++s) {
                    Rat acc(0);
                    for (std::size_t q = 0; q < unknowns; ++q) {
                        if (!row[q].is_zero() && !k1[s][q].is_zero()) acc += row[q] * k1[s][q];
                    }
                    in_kernel[s] = std::move(acc);
                }
                held_rows.push_back(std::move(in_kernel));
            }
            std::vector<std::vector<Rat>> k2 = kernel_basis(held_rows, k1.size());
            if (k2.empty()) continue;

            std::vector<std::vector<Rat>> candidates;
            for (const auto& beta : k2) {
                std::vector<Rat> w(unknowns);
                for (std::size_t s = 0; s < k1.size(); ++s) {
                    if (beta[s].is_zero()) continue;
                    for (std::size_t q = 0; q < unknowns; ++q) w[q] += beta[s] * k1[s][q];
                }
                candidates.push_back(std::move(w));
            }
            // Running sums widen the choice when no single basis vector has a
            // usable leading coefficient.
            for (std::size_t s = 1; s < candidates.size(); ++s) {
                std::vector<Rat> w = candidates[s - 1];
                for (std::size_t q = 0; q < unknowns; ++q) w[q] += candidates[s][q];
                candidates.push_back(std::move(w));
            }

            const std::vector<Rat>* best = nullptr;
            for (const auto& w : candidates) {
                Poly co = coeff_poly(w, o, deg);
                if (co.is_zero()) continue;
                Poly c0 = coeff_poly(w, 0, deg);
                if (!c0.is_zero()) {
                    best = &w;
                    break;
                }
                if (!best) best = &w;
            }
            if (!best) continue;

            std::vector<Poly> c(o + 1);
            for (std::size_t j = 0; j <= o; ++j) c[j] = coeff_poly(*best, j, deg);
            if (c[0].is_zero()) continue;       // would need order reduction
            if (!relation_holds(c, f, o)) continue;

            std::vector<RatFunc> h;
            h.reserve(o);
            for (std::size_t j = 0; j < o; ++j) h.emplace_back(c[j], c[o]);
            return Equation(o, std::move(h));
        }
    }
    return std::nullopt;
}

} // namespace seqring

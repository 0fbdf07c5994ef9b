#include "seqring/sequence.hpp"

#include "seqring/errors.hpp"

#include <sstream>

namespace seqring {

std::int64_t start_index(const LinSystem& a) {
    Int bound = 0;
    auto absorb = [&bound](const Poly& p) {
        if (p.degree() < 1) return;
        for (const Int& r : poly_integer_roots(p)) {
            if (r >= 0 && r + 1 > bound) bound = r + 1;
        }
    };
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) absorb(a.A().at(i, j).den());
    }
    absorb(a.det().num());
    absorb(a.det().den());
    return bound.convert_to<std::int64_t>();
}

FundMatrix fundamental_matrix(const LinSystem& a, std::int64_t horizon,
                              const std::optional<QMatrix>& seed) {
    std::int64_t i0 = start_index(a);
    if (horizon < i0) {
        throw WindowTooSmallError("horizon " + std::to_string(horizon) +
                                  " is below the start index " + std::to_string(i0));
    }
    QMatrix y0 = seed.value_or(QMatrix::identity(a.dim()));
    if (y0.det().is_zero()) throw SingularMatrixError("seed matrix must be invertible");

    FundMatrix out{a, i0, {}};
    out.Y.reserve(static_cast<std::size_t>(horizon - i0) + 1);
    out.Y.push_back(std::move(y0));
    for (std::int64_t i = i0; i < horizon; ++i) {
        out.Y.push_back(matk_eval(a.A(), i) * out.Y.back());
    }
    return out;
}

ExactSeq solve_equation(const Equation& e, const std::vector<Rat>& init, std::int64_t s,
                        std::int64_t horizon) {
    std::size_t n = e.order;
    if (init.size() != n) {
        throw InvalidEquationError("expected " + std::to_string(n) + " initial values, got " +
                                   std::to_string(init.size()));
    }
    if (horizon < s + static_cast<std::int64_t>(n)) {
        throw WindowTooSmallError("horizon must cover the initial values");
    }
    ExactSeq f{s, init, "solution of " + e.str()};
    f.values.reserve(static_cast<std::size_t>(horizon - s) + 1);
    for (std::int64_t i = s; i + static_cast<std::int64_t>(n) <= horizon; ++i) {
        Rat next(0);
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& fj = f.values[static_cast<std::size_t>(i - s) + j];
            if (!fj.is_zero()) next -= e.coeffs[j].eval_at(i) * fj;
        }
        f.values.push_back(std::move(next));
    }
    return f;
}

bool equation_satisfied(const Equation& e, const ExactSeq& f) {
    std::size_t n = e.order;
    for (std::int64_t i = f.start; i + static_cast<std::int64_t>(n) <= f.end(); ++i) {
        Rat acc = f.at(i + static_cast<std::int64_t>(n));
        for (std::size_t j = 0; j < n; ++j) {
            acc += e.coeffs[j].eval_at(i) * f.at(i + static_cast<std::int64_t>(j));
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

QMatrix constant_transition(const FundMatrix& y1, const FundMatrix& y2) {
    if (!(y1.system == y2.system)) {
        throw NotConstantError("fundamental matrices belong to different systems");
    }
    std::int64_t lo = std::max(y1.i0, y2.i0);
    std::int64_t hi = std::min(y1.end(), y2.end());
    if (lo > hi) throw EmptyOverlapError("fundamental matrices share no index");
    QMatrix c = y1.at(lo).inverse() * y2.at(lo);
    for (std::int64_t i = lo + 1; i <= hi; ++i) {
        if (!(y1.at(i) * c == y2.at(i))) {
            throw NotConstantError("transition differs at index " + std::to_string(i));
        }
    }
    return c;
}

std::vector<Rat> solution_coordinates(const ExactSeq& f, const FundMatrix& y) {
    std::int64_t n = static_cast<std::int64_t>(y.system.dim());
    std::int64_t lo = std::max(f.start, y.i0);
    std::int64_t hi = std::min(f.end() - n + 1, y.end());
    if (lo > hi) throw EmptyOverlapError("sequence and fundamental matrix share no index");

    auto stack = [&f, n](std::int64_t i) {
        std::vector<Rat> v;
        v.reserve(static_cast<std::size_t>(n));
        for (std::int64_t j = 0; j < n; ++j) v.push_back(f.at(i + j));
        return v;
    };
    std::vector<Rat> v = y.at(lo).inverse().apply(stack(lo));
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (y.at(i).apply(v) != stack(i)) {
            throw NotASolutionError("coordinates fail at index " + std::to_string(i));
        }
    }
    return v;
}

ExactSeq indicator_sequence(const APSet& s, std::int64_t start, std::int64_t horizon) {
    if (start < 0 || horizon < start) throw WindowTooSmallError("bad indicator range");
    ExactSeq f{start, {}, "indicator of " + ap_str(s)};
    f.values.reserve(static_cast<std::size_t>(horizon - start) + 1);
    for (std::int64_t i = start; i <= horizon; ++i) {
        f.values.push_back(ap_member(s, static_cast<std::uint64_t>(i)) ? Rat(1) : Rat(0));
    }
    return f;
}

namespace {

ExactSeq combine(const ExactSeq& f, const ExactSeq& g, bool add) {
    std::int64_t lo = std::max(f.start, g.start);
    std::int64_t hi = std::min(f.end(), g.end());
    if (lo > hi) throw EmptyOverlapError("sequences share no index");
    ExactSeq r{lo, {}, "(" + f.provenance + (add ? ") + (" : ") * (") + g.provenance + ")"};
    r.values.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (std::int64_t i = lo; i <= hi; ++i) {
        r.values.push_back(add ? f.at(i) + g.at(i) : f.at(i) * g.at(i));
    }
    return r;
}

} // namespace

ExactSeq seq_add(const ExactSeq& f, const ExactSeq& g) { return combine(f, g, true); }
ExactSeq seq_mul(const ExactSeq& f, const ExactSeq& g) { return combine(f, g, false); }

ExactSeq seq_shift(const ExactSeq& f, std::int64_t t) {
    if (t < 0) throw WindowTooSmallError("shift must be non-negative");
    std::int64_t lo = std::max<std::int64_t>(0, f.start - t);
    if (lo + t > f.end()) throw EmptyOverlapError("shift exceeds the defined window");
    ExactSeq r{lo, {}, "shift^" + std::to_string(t) + " of " + f.provenance};
    for (std::int64_t i = lo; i + t <= f.end(); ++i) r.values.push_back(f.at(i + t));
    return r;
}

ExactSeq entry_sequence(const FundMatrix& y, std::size_t r, std::size_t c) {
    std::ostringstream name;
    name << "Y[" << r + 1 << "][" << c + 1 << "]";
    ExactSeq f{y.i0, {}, name.str()};
    f.values.reserve(y.Y.size());
    for (const QMatrix& m : y.Y) f.values.push_back(m.at(r, c));
    return f;
}

ExactSeq det_sequence(const FundMatrix& y) {
    ExactSeq f{y.i0, {}, "det Y"};
    f.values.reserve(y.Y.size());
    f.values.push_back(y.Y.front().det());
    for (std::int64_t i = y.i0; i < y.end(); ++i) {
        f.values.push_back(y.system.det().eval_at(i) * f.values.back());
    }
    return f;
}

} // namespace seqring

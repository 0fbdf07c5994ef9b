#include "seqring/equation.hpp"

#include "seqring/errors.hpp"

#include <sstream>

namespace seqring {

Equation::Equation(std::size_t order_, std::vector<RatFunc> coeffs_)
    : order(order_), coeffs(std::move(coeffs_)) {
    if (order < 1) throw InvalidEquationError("order must be at least 1");
    if (coeffs.size() != order) {
        throw InvalidEquationError("expected " + std::to_string(order) + " coefficients, got " +
                                   std::to_string(coeffs.size()));
    }
    if (coeffs[0].is_zero()) throw InvalidEquationError("h_0 must be non-zero");
}

std::string Equation::str() const {
    std::ostringstream os;
    os << "s^" << order << "(y)";
    for (std::size_t j = order; j-- > 0;) {
        os << " + (" << coeffs[j].str() << ")";
        if (j == 0) {
            os << "*y";
        } else if (j == 1) {
            os << "*s(y)";
        } else {
            os << "*s^" << j << "(y)";
        }
    }
    os << " = 0";
    return os.str();
}

MatK MatK::identity(std::size_t n) {
    MatK m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc(Rat(1));
    return m;
}

MatK operator*(const MatK& a, const MatK& b) {
    MatK r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t k = 0; k < a.n_; ++k) {
            const RatFunc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j) {
                if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

RatFunc MatK::det() const {
    MatK m = *this;
    RatFunc d(Rat(1));
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && m.at(p, c).is_zero()) ++p;
        if (p == n_) return RatFunc();
        if (p != c) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        for (std::size_t i = c + 1; i < n_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            RatFunc f = m.at(i, c) / m.at(c, c);
            for (std::size_t j = c; j < n_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
    }
    return d;
}

LinSystem::LinSystem(MatK A) : a_(std::move(A)), det_(a_.det()) {
    if (det_.is_zero()) throw SingularSystemError("system matrix has zero determinant");
}

LinSystem companion_matrix(const Equation& e) {
    std::size_t n = e.order;
    MatK a(n);
    for (std::size_t i = 0; i + 1 < n; ++i) a.at(i, i + 1) = RatFunc(Rat(1));
    for (std::size_t j = 0; j < n; ++j) a.at(n - 1, j) = -e.coeffs[j];
    return LinSystem(std::move(a));
}

bool is_bell_case_equation(const Equation& e) {
    if (!e.coeffs[0].is_constant() || e.coeffs[0].is_zero()) return false;
    for (std::size_t j = 1; j < e.order; ++j) {
        if (e.coeffs[j].den().degree() != 0) return false;
    }
    return true;
}

bool is_bell_case_system(const MatK& a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.at(i, j).den().degree() != 0) return false;
        }
    }
    RatFunc d = a.det();
    return d.is_constant() && !d.is_zero();
}

QMatrix matk_eval(const MatK& a, long long i) {
    QMatrix m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) m.at(r, c) = a.at(r, c).eval_at(i);
    }
    return m;
}

MatK matk_shift(const MatK& a, long long t) {
    MatK m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) m.at(r, c) = a.at(r, c).shifted(t);
    }
    return m;
}

} // namespace seqring

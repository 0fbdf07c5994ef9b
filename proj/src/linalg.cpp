#include "seqring/linalg.hpp"

#include "seqring/errors.hpp"

#include <sstream>

namespace seqring {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

namespace {

// Accumulates sum += x * y over a running common denominator so the whole dot
// product is reduced once at the end instead of after every term.
struct FracAcc {
    Int num{0};
    Int den{1};
    int terms = 0;
    const Rat* single = nullptr;
    const Rat* single_scale = nullptr;

    void add(const Rat& x, const Rat& y) {
        if (x.is_zero() || y.is_zero()) return;
        if (++terms == 1) {
            single_scale = &x;
            single = &y;
            return;
        }
        if (terms == 2) {
            num = single_scale->num() * single->num();
            den = single_scale->den() * single->den();
        }
        Int tn = x.num() * y.num();
        Int td = x.den() * y.den();
        if (td == den) {
            num += tn;
            return;
        }
        Int g = detail::pos_gcd(den, td);
        Int scale = td / g;
        num = num * scale + tn * (den / g);
        den *= scale;
    }

    Rat value() const {
        if (terms == 0) return Rat();
        if (terms == 1) return *single_scale * *single;
        return Rat(num, den);
    }
};

} // namespace

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t j = 0; j < a.n_; ++j) {
            FracAcc acc;
            for (std::size_t k = 0; k < a.n_; ++k) acc.add(a.at(i, k), b.at(k, j));
            r.at(i, j) = acc.value();
        }
    }
    return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
    std::vector<Rat> r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        FracAcc acc;
        for (std::size_t j = 0; j < n_; ++j) acc.add(at(i, j), v[j]);
        r[i] = acc.value();
    }
    return r;
}

Rat QMatrix::det() const {
    QMatrix m = *this;
    Rat d(1);
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && m.at(p, c).is_zero()) ++p;
        if (p == n_) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        for (std::size_t i = c + 1; i < n_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c) / m.at(c, c);
            for (std::size_t j = c; j < n_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const {
    QMatrix m = *this;
    QMatrix inv = identity(n_);
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && m.at(p, c).is_zero()) ++p;
        if (p == n_) throw SingularMatrixError("matrix is singular");
        if (p != c) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(m.at(p, j), m.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        }
        Rat piv = m.at(c, c);
        for (std::size_t j = 0; j < n_; ++j) {
            m.at(c, j) = m.at(c, j) / piv;
            inv.at(c, j) = inv.at(c, j) / piv;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == c || m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < n_; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(c, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<Rat>> kernel_basis(const std::vector<std::vector<Rat>>& rows,
                                           std::size_t ncols) {
    // Clear denominators row by row.
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        Int l = 1;
        for (const Rat& x : row) l = boost::multiprecision::lcm(l, x.den());
        std::vector<Int> r(ncols);
        bool nonzero = false;
        for (std::size_t j = 0; j < ncols; ++j) {
            r[j] = row[j].num() * (l / row[j].den());
            nonzero = nonzero || r[j] != 0;
        }
        if (nonzero) m.push_back(std::move(r));
    }

    // Bareiss forward elimination; prev is the previous pivot (division exact).
    std::vector<std::size_t> pivot_cols;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> x(ncols);
        x[fc] = Rat(1);
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            std::size_t pc = pivot_cols[k];
            Rat acc(0);
            for (std::size_t j = pc + 1; j < ncols; ++j) {
                if (!x[j].is_zero() && m[k][j] != 0) acc += Rat(m[k][j]) * x[j];
            }
            x[pc] = -acc / Rat(m[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace seqring

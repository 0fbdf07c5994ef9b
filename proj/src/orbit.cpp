#include "seqring/orbit.hpp"

#include "seqring/detail/cursor.hpp"
#include "seqring/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace seqring {

Monomial Monomial::variable(unsigned i, unsigned j) {
    Monomial m;
    m.e_[{i, j}] = 1;
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [v, e] : o.e_) r.e_[v] += e;
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (const auto& [v, e] : o.e_) {
        auto it = e_.find(v);
        if (it == e_.end() || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [v, e] : o.e_) {
        auto it = r.e_.find(v);
        it->second -= e;
        if (it->second == 0) r.e_.erase(it);
    }
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    // Lexicographic with earlier variables dominant: at the first variable
    // where the exponents differ, the larger exponent wins.
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end()) return false;              // *this has an extra early variable
        if (a == e_.end()) return true;
        if (a->first != b->first) return a->first > b->first;
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return false;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : e_) {
        if (!first) os << "*";
        os << "Z[" << v.first << "][" << v.second << "]";
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

OrbitState::OrbitState(std::int64_t b_, QMatrix B_) : b(b_), B(std::move(B_)) {
    if (B.det().is_zero()) throw SingularMatrixError("orbit state matrix must be invertible");
}

namespace {

// Sign of the permutation, by counting inversions.
int permutation_sign(const std::vector<unsigned>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    }
    return inv % 2 == 0 ? 1 : -1;
}

std::map<Monomial, RatFunc> det_terms(std::size_t n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    std::map<Monomial, RatFunc> t;
    do {
        Monomial m;
        for (unsigned i = 1; i <= n; ++i) m = m * Monomial::variable(i, perm[i - 1]);
        t.emplace(std::move(m), RatFunc(Rat(permutation_sign(perm))));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return t;
}

void add_term(std::map<Monomial, RatFunc>& acc, const Monomial& m, const RatFunc& c) {
    auto [it, inserted] = acc.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

std::map<Monomial, RatFunc> mul_terms(const std::map<Monomial, RatFunc>& a,
                                      const std::map<Monomial, RatFunc>& b) {
    std::map<Monomial, RatFunc> r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) add_term(r, ma * mb, ca * cb);
    }
    return r;
}

// Exact quotient by det(Z); nullopt when the poly is not a multiple. Greedy
// leading-term division: for exact multiples the remainder cancels entirely.
std::optional<std::map<Monomial, RatFunc>> divide_by_det(std::map<Monomial, RatFunc> r,
                                                         std::size_t n) {
    std::map<Monomial, RatFunc> det = det_terms(n);
    Monomial diag;
    for (unsigned i = 1; i <= n; ++i) diag = diag * Monomial::variable(i, i);

    std::map<Monomial, RatFunc> q;
    while (!r.empty()) {
        const auto& [lead, coeff] = *r.rbegin();
        if (!lead.divisible_by(diag)) return std::nullopt;
        Monomial t = lead.divided_by(diag);
        RatFunc tc = coeff; // det's leading (diagonal) coefficient is 1
        q.emplace(t, tc);
        for (const auto& [dm, dc] : det) add_term(r, t * dm, -(tc * dc));
    }
    return q;
}

} // namespace

void RegularFunction::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    if (terms_.empty()) {
        det_power_ = 0;
        return;
    }
    while (det_power_ > 0) {
        auto q = divide_by_det(terms_, n_);
        if (!q) break;
        terms_ = std::move(*q);
        --det_power_;
    }
}

RegularFunction RegularFunction::constant(std::size_t n, RatFunc c) {
    RegularFunction f(n);
    if (!c.is_zero()) f.terms_.emplace(Monomial{}, std::move(c));
    return f;
}

RegularFunction RegularFunction::z_coord(std::size_t n) { return constant(n, RatFunc::z()); }

RegularFunction RegularFunction::variable(std::size_t n, unsigned i, unsigned j) {
    RegularFunction f(n);
    f.terms_.emplace(Monomial::variable(i, j), RatFunc(Rat(1)));
    return f;
}

RegularFunction RegularFunction::det_z(std::size_t n) {
    RegularFunction f(n);
    f.terms_ = det_terms(n);
    return f;
}

RegularFunction RegularFunction::det_z_inverse(std::size_t n, unsigned power) {
    RegularFunction f(n);
    f.terms_.emplace(Monomial{}, RatFunc(Rat(1)));
    f.det_power_ = power;
    return f;
}

RegularFunction RegularFunction::from_terms(std::size_t n, std::map<Monomial, RatFunc> terms,
                                            unsigned det_power) {
    RegularFunction f(n);
    f.terms_ = std::move(terms);
    f.det_power_ = det_power;
    f.canonicalize();
    return f;
}

unsigned RegularFunction::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

RegularFunction RegularFunction::operator-() const {
    RegularFunction r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

namespace {

void require_same_space(const RegularFunction& a, const RegularFunction& b) {
    if (a.dim() != b.dim()) throw Error("regular functions live on different spaces");
}

} // namespace

RegularFunction operator+(const RegularFunction& a, const RegularFunction& b) {
    require_same_space(a, b);
    unsigned m = std::max(a.det_power(), b.det_power());
    std::map<Monomial, RatFunc> det = det_terms(a.dim());

    auto lift = [&](const RegularFunction& f) {
        std::map<Monomial, RatFunc> t = f.terms();
        for (unsigned k = f.det_power(); k < m; ++k) t = mul_terms(t, det);
        return t;
    };
    std::map<Monomial, RatFunc> sum = lift(a);
    for (const auto& [mono, c] : lift(b)) add_term(sum, mono, c);
    return RegularFunction::from_terms(a.dim(), std::move(sum), m);
}

RegularFunction operator-(const RegularFunction& a, const RegularFunction& b) { return a + (-b); }

RegularFunction operator*(const RegularFunction& a, const RegularFunction& b) {
    require_same_space(a, b);
    return RegularFunction::from_terms(a.dim(), mul_terms(a.terms(), b.terms()),
                                       a.det_power() + b.det_power());
}

RegularFunction RegularFunction::scaled(const RatFunc& c) const {
    RegularFunction r(n_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    r.det_power_ = det_power_;
    for (auto& [m, x] : r.terms_) x = x * c;
    return r;
}

RegularFunction RegularFunction::pow(unsigned e) const {
    RegularFunction r = constant(n_, RatFunc(Rat(1)));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

Rat RegularFunction::poly_value(const OrbitState& x) const {
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c.eval(Rat(x.b));
        for (const auto& [var, e] : m.exponents()) {
            v = v * x.B.at(var.first - 1, var.second - 1).pow(static_cast<long long>(e));
        }
        acc += v;
    }
    return acc;
}

Rat RegularFunction::evaluate(const OrbitState& x) const {
    Rat acc = poly_value(x);
    if (det_power_ > 0) acc = acc / x.B.det().pow(static_cast<long long>(det_power_));
    return acc;
}

Rat RegularFunction::evaluate(const OrbitState& x, const Rat& det_b) const {
    Rat acc = poly_value(x);
    if (det_power_ > 0) acc = acc / det_b.pow(static_cast<long long>(det_power_));
    return acc;
}

namespace {

std::string coeff_prefix(const RatFunc& c, bool bare_monomial) {
    std::string s = c.str();
    if (bare_monomial) {
        if (s == "1") return "";
        if (s == "-1") return "-";
    }
    bool wrap = s.find_first_of("+-*/") != std::string::npos;
    if (wrap) s = "(" + s + ")";
    return bare_monomial ? s + "*" : s;
}

} // namespace

std::string RegularFunction::poly_str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string t = it->first.is_one() ? coeff_prefix(it->second, false)
                                           : coeff_prefix(it->second, true) + it->first.str();
        if (first) {
            os << t;
        } else if (t.front() == '-') {
            os << " - " << t.substr(1);
        } else {
            os << " + " << t;
        }
        first = false;
    }
    return os.str();
}

std::string RegularFunction::str() const {
    if (det_power_ == 0) return poly_str();
    std::string p = poly_str();
    if (terms_.size() > 1) p = "(" + p + ")";
    return p + "*detZ^-" + std::to_string(det_power_);
}

namespace {

using detail::Cursor;

class RegularParser {
public:
    RegularParser(std::string_view text, std::size_t n) : cur_(text), n_(n) {}

    RegularFunction parse() {
        RegularFunction f = expr();
        if (!cur_.done()) cur_.fail("unexpected trailing input");
        return f;
    }

private:
    Cursor cur_;
    std::size_t n_;

    RegularFunction atom() {
        char c = cur_.peek();
        if (c == '(') {
            cur_.accept('(');
            RegularFunction inner = expr();
            cur_.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RegularFunction::constant(n_, RatFunc(Rat(cur_.integer())));
        }
        std::size_t at = cur_.pos();
        std::string w = cur_.word();
        if (w == "z") return RegularFunction::z_coord(n_);
        if (w == "detZ") return RegularFunction::det_z(n_);
        if (w == "Z") {
            cur_.expect('[');
            Int i = cur_.integer();
            cur_.expect(']');
            cur_.expect('[');
            Int j = cur_.integer();
            cur_.expect(']');
            if (i < 1 || j < 1 || i > static_cast<long long>(n_) || j > static_cast<long long>(n_)) {
                throw ParseError("matrix index out of range", at);
            }
            return RegularFunction::variable(n_, i.convert_to<unsigned>(),
                                             j.convert_to<unsigned>());
        }
        throw ParseError("expected integer, 'z', 'Z[i][j]', 'detZ' or '('", at);
    }

    RegularFunction power() {
        RegularFunction base = atom();
        if (cur_.accept('^')) {
            std::size_t at = cur_.pos();
            bool neg = cur_.accept('-');
            Int e = cur_.integer();
            if (e > 64) throw ParseError("exponent too large", at);
            if (neg) {
                if (!(base == RegularFunction::det_z(n_))) {
                    throw ParseError("negative exponent is only allowed on detZ", at);
                }
                return RegularFunction::det_z_inverse(n_, e.convert_to<unsigned>());
            }
            return base.pow(e.convert_to<unsigned>());
        }
        return base;
    }

    RegularFunction factor() {
        if (cur_.accept('-')) return -factor();
        if (cur_.accept('+')) return factor();
        return power();
    }

    RegularFunction term() {
        RegularFunction value = factor();
        while (true) {
            if (cur_.accept('*')) {
                value *= factor();
            } else if (cur_.peek() == '/') {
                std::size_t at = cur_.pos();
                cur_.accept('/');
                RegularFunction rhs = factor();
                bool scalar = rhs.det_power() == 0 &&
                              (rhs.terms().empty() ||
                               (rhs.terms().size() == 1 && rhs.terms().begin()->first.is_one()));
                if (!scalar) throw ParseError("can only divide by coefficient expressions", at);
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                value = value.scaled(RatFunc(Rat(1)) / rhs.terms().begin()->second);
            } else {
                return value;
            }
        }
    }

    RegularFunction expr() {
        RegularFunction value = term();
        while (true) {
            if (cur_.accept('+')) {
                value += term();
            } else if (cur_.peek() == '-') {
                cur_.accept('-');
                value -= term();
            } else {
                return value;
            }
        }
    }
};

} // namespace

RegularFunction parse_regular(std::string_view text, std::size_t n) {
    return RegularParser(text, n).parse();
}

Subvariety::Subvariety(std::vector<RegularFunction> gens) : generators(std::move(gens)) {
    if (generators.empty()) throw Error("subvariety needs at least one generator");
}

namespace {

// A(b) when defined and invertible; nullopt (with a reason) otherwise.
std::optional<QMatrix> step_matrix(const LinSystem& a, std::int64_t b, std::string* why) {
    QMatrix m;
    try {
        m = matk_eval(a.A(), b);
    } catch (const PoleError&) {
        if (why) *why = "system matrix has a pole at index " + std::to_string(b);
        return std::nullopt;
    }
    if (m.det().is_zero()) {
        if (why) *why = "system matrix is singular at index " + std::to_string(b);
        return std::nullopt;
    }
    return m;
}

} // namespace

OrbitState orbit_step(const LinSystem& a, const OrbitState& x) {
    std::string why;
    std::optional<QMatrix> m = step_matrix(a, x.b, &why);
    if (!m) throw UndefinedOrbitError(why);
    OrbitState next = x;
    next.b = x.b + 1;
    next.B = *m * x.B;
    return next;
}

std::vector<OrbitState> orbit_trace(const LinSystem& a, const OrbitState& x,
                                    std::int64_t horizon) {
    if (horizon < x.b) throw WindowTooSmallError("horizon is below the orbit start");
    std::vector<OrbitState> trace;
    trace.reserve(static_cast<std::size_t>(horizon - x.b) + 1);
    trace.push_back(x);
    for (std::int64_t b = x.b; b < horizon; ++b) {
        std::string why;
        std::optional<QMatrix> m = step_matrix(a, b, &why);
        if (!m) throw UndefinedOrbitError(why);
        OrbitState next = trace.back();
        next.b = b + 1;
        next.B = *m * next.B;
        trace.push_back(std::move(next));
    }
    return trace;
}

std::int64_t orbit_defined_prefix(const LinSystem& a, const OrbitState& x, std::int64_t horizon) {
    std::int64_t m = -1;
    OrbitState cur = x;
    for (std::int64_t i = 0; i <= horizon; ++i) {
        std::optional<QMatrix> step = step_matrix(a, cur.b, nullptr);
        if (!step) break;
        m = i;
        if (i == horizon) break;
        cur.b += 1;
        cur.B = *step * cur.B;
    }
    return m;
}

ExactSeq evaluate_along_orbit(const RegularFunction& f, const LinSystem& a, const OrbitState& x,
                              std::int64_t horizon) {
    if (x.b < 0) throw UndefinedOrbitError("orbit start must be a natural index");
    std::vector<OrbitState> trace = orbit_trace(a, x, horizon);
    ExactSeq seq{x.b, {}, "psi(" + f.str() + ")"};
    seq.values.reserve(trace.size());
    if (f.det_power() == 0) {
        for (const OrbitState& s : trace) seq.values.push_back(f.evaluate(s));
        return seq;
    }
    // det(B) follows the one-step rule det(sigma x) = det A(b) det(B); keeping
    // it incrementally avoids eliminating the full-size matrix at every index.
    Rat det = x.B.det();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        seq.values.push_back(f.evaluate(trace[i], det));
        if (i + 1 < trace.size()) det = matk_eval(a.A(), trace[i].b).det() * det;
    }
    return seq;
}

std::set<std::uint64_t> orbit_membership_set(const LinSystem& a, const OrbitState& x,
                                             const Subvariety& y, std::int64_t horizon) {
    if (x.b < 0) throw UndefinedOrbitError("orbit start must be a natural index");
    std::vector<OrbitState> trace = orbit_trace(a, x, horizon);
    std::set<std::uint64_t> hits;
    for (const OrbitState& s : trace) {
        bool all_zero = true;
        for (const RegularFunction& g : y.generators) {
            // the det(Z) factor never vanishes along an orbit
            if (!g.poly_value(s).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) hits.insert(static_cast<std::uint64_t>(s.b));
    }
    return hits;
}

RegularFunction sigma_action(const RegularFunction& f, const LinSystem& a) {
    std::size_t n = f.dim();
    if (n != a.dim()) throw Error("regular function and system have different dimensions");

    // (AZ)_{ij} = sum_k A_ik(z) Z_kj.
    std::vector<std::vector<RegularFunction>> sub(n + 1, std::vector<RegularFunction>(n + 1));
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            RegularFunction s(n);
            for (unsigned k = 1; k <= n; ++k) {
                s += RegularFunction::variable(n, k, j).scaled(a.A().at(i - 1, k - 1));
            }
            sub[i][j] = std::move(s);
        }
    }

    RegularFunction acc(n);
    for (const auto& [mono, coeff] : f.terms()) {
        RegularFunction term = RegularFunction::constant(n, coeff.shifted(1));
        for (const auto& [var, e] : mono.exponents()) {
            for (unsigned k = 0; k < e; ++k) term *= sub[var.first][var.second];
        }
        acc += term;
    }
    if (f.det_power() > 0) {
        acc = acc.scaled(a.det().pow(-static_cast<long long>(f.det_power())));
    }
    return RegularFunction::from_terms(n, acc.terms(), f.det_power());
}

LinSystem rebase(const LinSystem& a, std::int64_t b) { return LinSystem(matk_shift(a.A(), b)); }

Subvariety rebase_subvariety(const Subvariety& y, std::int64_t b) {
    std::vector<RegularFunction> gens;
    gens.reserve(y.generators.size());
    for (const RegularFunction& g : y.generators) gens.push_back(shift_coefficients(g, b));
    return Subvariety(std::move(gens));
}

RegularFunction shift_coefficients(const RegularFunction& f, std::int64_t t) {
    std::map<Monomial, RatFunc> terms;
    for (const auto& [m, c] : f.terms()) terms.emplace(m, c.shifted(t));
    return RegularFunction::from_terms(f.dim(), std::move(terms), f.det_power());
}

} // namespace seqring

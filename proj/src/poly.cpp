#include "seqring/poly.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace seqring {

namespace {
const Rat kZero{};
} // namespace

Poly::Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::z() { return Poly({Rat(0), Rat(1)}); }

Poly Poly::monomial(const Rat& c, std::size_t e) {
    if (c.is_zero()) return Poly();
    std::vector<Rat> v(e + 1);
    v[e] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& Poly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rat& Poly::leading() const {
    return c_.empty() ? kZero : c_.back();
}

Poly operator-(const Poly& p) {
    Poly r = p;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rat& c, const Poly& p) {
    if (c.is_zero()) return Poly();
    Poly r = p;
    for (auto& x : r.c_) x *= c;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shifted(long long t) const {
    if (t == 0 || is_zero()) return *this;
    // Horner with respect to the shifted variable: p(z+t).
    Poly acc;
    Poly zt = Poly::z() + Poly(Rat(Int(t)));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * zt + Poly(*it);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly rem = *this;
    std::vector<Rat> q;
    if (rem.degree() >= d.degree())
        q.assign(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, Rat());
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
        Rat factor = rem.leading() / d.leading();
        q[shift] = factor;
        rem -= Poly::monomial(factor, shift) * d;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return (Rat(1) / leading()) * *this;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    Int den_lcm = 1;
    for (const auto& c : c_)
        den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    Int content = 0;
    for (const auto& c : c_)
        content = boost::multiprecision::gcd(content, c.num() * (den_lcm / c.den()));
    Rat scale = Rat(den_lcm, content);
    if (leading().sign() < 0) scale = -scale;
    return scale * *this;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        const Rat& c = c_[static_cast<std::size_t>(e)];
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rat a = c.abs();
        if (e == 0) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += "z";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

bool is_probab_prime(const Int& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

// Pollard rho with a fixed generator sequence; n must be composite and odd.
Int pollard_rho(const Int& n) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    while (true) {
        Int x = Int(rng()) % n;
        Int y = x;
        Int c = Int(rng()) % n + 1;
        Int d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::multiprecision::gcd(boost::multiprecision::abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factorize(Int n, std::map<Int, unsigned>& out) {
    if (n <= 1) return;
    for (Int p : {Int(2), Int(3), Int(5)}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    // Trial division by 6k +/- 1 up to a fixed cutoff, then rho on the rest.
    Int d = 7;
    const Int cutoff = 1 << 20;
    while (d <= cutoff && d * d <= n) {
        for (Int step : {Int(4), Int(2)}) {
            while (n % d == 0) {
                ++out[d];
                n /= d;
            }
            d += step;
        }
    }
    if (n == 1) return;
    if (d * d > n || is_probab_prime(n)) {
        ++out[n];
        return;
    }
    Int f = pollard_rho(n);
    factorize(f, out);
    factorize(n / f, out);
}

// All positive divisors of the factored number that are <= bound.
void divisors_up_to(const std::vector<std::pair<Int, unsigned>>& factors,
                    std::size_t idx, const Int& acc, const Int& bound,
                    std::vector<Int>& out) {
    if (idx == factors.size()) {
        out.push_back(acc);
        return;
    }
    Int v = acc;
    for (unsigned e = 0; e <= factors[idx].second; ++e) {
        if (v > bound) break;
        divisors_up_to(factors, idx + 1, v, bound, out);
        v *= factors[idx].first;
    }
}

} // namespace

std::vector<Int> poly_integer_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("integer roots of the zero polynomial");
    std::vector<Int> roots;

    // Strip powers of z: z = 0 is a root iff the constant term vanishes.
    std::size_t low = 0;
    while (p.coeff(low).is_zero()) ++low;
    if (low > 0) roots.push_back(0);

    std::vector<Rat> rest(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
    Poly q = Poly(std::move(rest)).primitive_part();
    if (q.degree() >= 1) {
        // Candidate roots divide the (non-zero) constant term; the Cauchy
        // bound 1 + max|a_i|/|a_n| prunes the enumeration.
        Int a0 = boost::multiprecision::abs(q.coeff(0).num());
        Rat cauchy(0);
        for (int i = 0; i < q.degree(); ++i) {
            Rat m = (q.coeff(static_cast<std::size_t>(i)) / q.leading()).abs();
            if (m > cauchy) cauchy = m;
        }
        Int bound = cauchy.num() / cauchy.den() + 2;
        if (bound > a0) bound = a0;

        std::map<Int, unsigned> fmap;
        factorize(a0, fmap);
        std::vector<std::pair<Int, unsigned>> factors(fmap.begin(), fmap.end());
        std::vector<Int> cands;
        divisors_up_to(factors, 0, 1, bound, cands);
        for (const Int& d : cands) {
            if (q.eval(Rat(d)).is_zero()) roots.push_back(d);
            if (q.eval(Rat(-d)).is_zero()) roots.push_back(-d);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace seqring

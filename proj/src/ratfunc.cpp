#include "seqring/ratfunc.hpp"

#include "seqring/errors.hpp"

#include <sstream>

namespace seqring {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat lead = den_.leading();
    if (!(lead == Rat(1))) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rat RatFunc::eval(const Rat& point) const {
    Rat d = den_.eval(point);
    if (d.is_zero()) {
        std::ostringstream os;
        os << "pole of " << str() << " at z = " << point;
        throw PoleError(os.str());
    }
    return num_.eval(point) / d;
}

RatFunc RatFunc::shifted(long long t) const {
    return RatFunc(num_.shifted(t), den_.shifted(t));
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) {
        if (is_zero()) throw DivisionByZeroError("negative power of zero");
        return RatFunc(den_, num_).pow(-e);
    }
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

// A printed polynomial needs parentheses inside a larger expression when it
// has several terms or a leading minus.
bool needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && i > 0) return true;
    }
    return !s.empty() && s[0] == '-';
}

} // namespace

std::string RatFunc::str() const {
    std::string n = num_.str();
    if (den_ == Poly(Rat(1))) return n;
    std::string d = den_.str();
    std::string out;
    if (needs_parens(n)) {
        out = "(" + n + ")";
    } else {
        out = n;
    }
    out += "/";
    if (needs_parens(d) || d.find('*') != std::string::npos || d.find('/') != std::string::npos) {
        out += "(" + d + ")";
    } else {
        out += d;
    }
    return out;
}

} // namespace seqring

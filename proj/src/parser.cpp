#include "seqring/parser.hpp"

#include "seqring/detail/cursor.hpp"
#include "seqring/errors.hpp"

namespace seqring {

namespace {

using detail::Cursor;

constexpr long long kMaxExponent = 100000;

RatFunc parse_expr(Cursor& cur);

RatFunc parse_atom(Cursor& cur) {
    char c = cur.peek();
    if (c == '(') {
        cur.accept('(');
        RatFunc inner = parse_expr(cur);
        cur.expect(')');
        return inner;
    }
    if (c == 'z') {
        cur.accept('z');
        return RatFunc::z();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rat(cur.integer()));
    cur.fail("expected integer, 'z' or '('");
}

RatFunc parse_power(Cursor& cur) {
    RatFunc base = parse_atom(cur);
    if (cur.accept('^')) {
        std::size_t at = cur.pos();
        if (cur.peek() == '-') throw ParseError("exponent must be non-negative", at);
        Int e = cur.integer();
        if (e > kMaxExponent) throw ParseError("exponent too large", at);
        return base.pow(e.convert_to<long long>());
    }
    return base;
}

RatFunc parse_factor(Cursor& cur) {
    if (cur.accept('-')) return -parse_factor(cur);
    if (cur.accept('+')) return parse_factor(cur);
    return parse_power(cur);
}

RatFunc parse_term(Cursor& cur) {
    RatFunc value = parse_factor(cur);
    while (true) {
        if (cur.accept('*')) {
            value *= parse_factor(cur);
        } else if (cur.peek() == '/') {
            std::size_t at = cur.pos();
            cur.accept('/');
            RatFunc rhs = parse_factor(cur);
            if (rhs.is_zero()) throw ParseError("division by zero polynomial", at);
            value /= rhs;
        } else {
            return value;
        }
    }
}

RatFunc parse_expr(Cursor& cur) {
    RatFunc value = parse_term(cur);
    while (true) {
        if (cur.accept('+')) {
            value += parse_term(cur);
        } else if (cur.peek() == '-') {
            cur.accept('-');
            value -= parse_term(cur);
        } else {
            return value;
        }
    }
}

} // namespace

RatFunc parse_ratfunc(std::string_view text) {
    Cursor cur(text);
    RatFunc value = parse_expr(cur);
    if (!cur.done()) cur.fail("unexpected trailing input");
    return value;
}

} // namespace seqring

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "seqring/equation.hpp"
#include "seqring/guess.hpp"
#include "seqring/linalg.hpp"
#include "seqring/parser.hpp"
#include "seqring/sequence.hpp"

#include "testutil.hpp"

using namespace seqring;

namespace {

Equation fibonacci() {
    return Equation(2, {RatFunc(Rat(-1)), RatFunc(Rat(-1))});
}

Equation factorial() {
    // sigma(y) - (z+1) y = 0
    return Equation(1, {RatFunc(Poly()) - RatFunc(Poly::z() + Poly(1))});
}

MatK from_strings(std::size_t n, const std::vector<std::string>& rows) {
    MatK m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = parse_ratfunc(rows[i * n + j]);
    }
    return m;
}

} // namespace

TEST_CASE("equations reject a vanishing trailing coefficient") {
    CHECK_THROWS_AS(Equation(2, {RatFunc(), RatFunc(Rat(1))}), InvalidEquationError);
    CHECK_THROWS_AS(Equation(0, {}), InvalidEquationError);
    CHECK_THROWS_AS(Equation(2, {RatFunc(Rat(1))}), InvalidEquationError);
    CHECK_NOTHROW(Equation(1, {RatFunc(Poly::z())}));
}

TEST_CASE("equation display") {
    CHECK(fibonacci().str() == "s^2(y) + (-1)*s(y) + (-1)*y = 0");
}

TEST_CASE("companion matrix layout") {
    LinSystem fib = companion_matrix(fibonacci());
    CHECK(fib.A() == from_strings(2, {"0", "1", "1", "1"}));
    CHECK(fib.det() == RatFunc(Rat(-1)));

    LinSystem fac = companion_matrix(factorial());
    CHECK(fac.A() == from_strings(1, {"z+1"}));

    Equation e3(3, {parse_ratfunc("2"), parse_ratfunc("z"), parse_ratfunc("-1/3")});
    LinSystem a3 = companion_matrix(e3);
    CHECK(a3.A() == from_strings(3, {"0", "1", "0", "0", "0", "1", "-2", "-z", "1/3"}));
}

TEST_CASE("companion determinant is the trailing coefficient up to sign") {
    auto rng = testutil::make_rng(41);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = static_cast<std::size_t>(testutil::rand_int(rng, 1, 4));
        std::vector<RatFunc> h;
        h.push_back(testutil::random_ratfunc(rng, 1, 4));
        if (h[0].is_zero()) h[0] = RatFunc(Rat(2));
        for (std::size_t j = 1; j < n; ++j) h.push_back(testutil::random_ratfunc(rng, 1, 4));
        Equation e(n, h);
        RatFunc expected = (n % 2 == 0) ? e.coeffs[0] : RatFunc() - e.coeffs[0];
        CHECK(companion_matrix(e).det() == expected);
    }
}

TEST_CASE("wrapping a singular matrix fails immediately") {
    CHECK_THROWS_AS(LinSystem(from_strings(2, {"1", "1", "1", "1"})), SingularSystemError);
    CHECK_THROWS_AS(LinSystem(from_strings(2, {"z", "1", "z^2", "z"})), SingularSystemError);
    CHECK_NOTHROW(LinSystem(from_strings(2, {"z", "1", "z^2", "z+1"})));
}

TEST_CASE("coefficient shape checks") {
    CHECK(is_bell_case_equation(fibonacci()));
    CHECK(is_bell_case_equation(Equation(2, {parse_ratfunc("3"), parse_ratfunc("z^2")})));
    // non-constant trailing coefficient
    CHECK_FALSE(is_bell_case_equation(Equation(1, {parse_ratfunc("z")})));
    // rational middle coefficient
    CHECK_FALSE(
        is_bell_case_equation(Equation(2, {parse_ratfunc("1"), parse_ratfunc("1/(z+1)")})));
    // rational trailing coefficient
    CHECK_FALSE(is_bell_case_equation(Equation(1, {parse_ratfunc("(z-4)/(z-5)")})));

    CHECK(is_bell_case_system(from_strings(2, {"0", "1", "1", "1"})));
    CHECK(is_bell_case_system(from_strings(2, {"1", "z^2", "0", "1"})));
    CHECK_FALSE(is_bell_case_system(from_strings(2, {"z", "1", "0", "1"})));      // det = z
    CHECK_FALSE(is_bell_case_system(from_strings(2, {"1", "1/(z-2)", "0", "1"}))); // pole
}

TEST_CASE("random companion systems of the constant-determinant shape pass the check") {
    auto rng = testutil::make_rng(42);
    for (int t = 0; t < 40; ++t) {
        Equation e = testutil::random_bell_equation(
            rng, static_cast<std::size_t>(testutil::rand_int(rng, 1, 3)), 2);
        CHECK(is_bell_case_equation(e));
        CHECK(is_bell_case_system(companion_matrix(e).A()));
    }
}

TEST_CASE("matrix evaluation and entry-wise shift") {
    MatK a = from_strings(1, {"1/(z-3)"});
    CHECK_THROWS_AS(matk_eval(a, 3), PoleError);
    CHECK(matk_eval(a, 4).at(0, 0) == Rat(1));
    MatK s = matk_shift(from_strings(1, {"z"}), 2);
    CHECK(s.at(0, 0) == parse_ratfunc("z+2"));
    CHECK(matk_shift(from_strings(1, {"z/(z-3)"}), 5).at(0, 0) == parse_ratfunc("(z+5)/(z+2)"));
}

TEST_CASE("kernel vectors satisfy the system exactly") {
    std::vector<std::vector<Rat>> rows{{Rat(1), Rat(1)}};
    auto basis = kernel_basis(rows, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rat>{Rat(-1), Rat(1)});

    // full rank leaves nothing
    CHECK(kernel_basis({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2).empty());
    // no rows leaves everything
    auto all = kernel_basis({}, 3);
    CHECK(all.size() == 3);

    auto rng = testutil::make_rng(43);
    for (int t = 0; t < 60; ++t) {
        std::size_t ncols = static_cast<std::size_t>(testutil::rand_int(rng, 1, 6));
        std::size_t nrows = static_cast<std::size_t>(testutil::rand_int(rng, 1, 7));
        std::vector<std::vector<Rat>> m(nrows);
        for (auto& row : m) {
            for (std::size_t j = 0; j < ncols; ++j) row.push_back(testutil::random_rat(rng, 6, 4));
        }
        auto b = kernel_basis(m, ncols);
        for (const auto& v : b) {
            for (const auto& row : m) {
                Rat acc(0);
                for (std::size_t j = 0; j < ncols; ++j) acc += row[j] * v[j];
                CHECK(acc.is_zero());
            }
        }
        // each basis vector is pinned to a distinct free column
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(b[i] != b[j]);
        }
    }
}

TEST_CASE("kernel dimension matches rank") {
    // planted rank-1 3x4 system: kernel has dimension 3
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> base{Rat(2), Rat(-1), Rat(3), Rat(5)};
    for (int k = 1; k <= 3; ++k) {
        std::vector<Rat> r;
        for (const Rat& x : base) r.push_back(Rat(k) * x);
        rows.push_back(r);
    }
    CHECK(kernel_basis(rows, 4).size() == 3);
}

TEST_CASE("fitted recurrences on classic sequences") {
    ExactSeq fib{0, {}, "fib"};
    Rat a(0), b(1);
    for (int i = 0; i < 40; ++i) {
        fib.values.push_back(a);
        Rat c = a + b;
        a = b;
        b = c;
    }
    auto efib = guess_recurrence(fib, 2, 0);
    REQUIRE(efib.has_value());
    CHECK(*efib == fibonacci());

    ExactSeq fact{0, {}, "factorial"};
    Rat v(1);
    for (int i = 0; i < 30; ++i) {
        fact.values.push_back(v);
        v *= Rat(i + 1);
    }
    auto efact = guess_recurrence(fact, 1, 1);
    REQUIRE(efact.has_value());
    CHECK(*efact == factorial());

    ExactSeq fives{0, std::vector<Rat>(25, Rat(5)), "const"};
    auto econst = guess_recurrence(fives, 2, 1);
    REQUIRE(econst.has_value());
    CHECK(*econst == Equation(1, {RatFunc(Rat(-1))}));
}

TEST_CASE("no recurrence within the bounds comes back empty") {
    ExactSeq squares{0, {}, "squares"};
    for (int i = 0; i < 20; ++i) squares.values.push_back(Rat(i) * Rat(i));
    CHECK_FALSE(guess_recurrence(squares, 1, 0).has_value());
    // the same data fits once the order bound allows it
    auto e = guess_recurrence(squares, 3, 0);
    REQUIRE(e.has_value());
    CHECK(e->order <= 3);
    CHECK(testutil::satisfies_cleared(*e, squares));
}

TEST_CASE("too little data is an error, not a wrong answer") {
    ExactSeq tiny{0, {Rat(1), Rat(1), Rat(2)}, "tiny"};
    CHECK_THROWS_AS(guess_recurrence(tiny, 2, 1), InsufficientDataError);
}

TEST_CASE("fitted equations reproduce generated solutions") {
    auto rng = testutil::make_rng(44);
    for (int t = 0; t < 25; ++t) {
        std::size_t order = static_cast<std::size_t>(testutil::rand_int(rng, 1, 3));
        Equation e = testutil::random_bell_equation(rng, order, 2);
        std::vector<Rat> init;
        for (std::size_t j = 0; j < order; ++j) init.push_back(Rat(testutil::rand_int(rng, -3, 3)));
        if (init[0].is_zero()) init[0] = Rat(1);
        ExactSeq f = solve_equation(e, init, 0, 80);
        auto guessed = guess_recurrence(f, 3, 2);
        REQUIRE(guessed.has_value());
        CHECK(testutil::satisfies_cleared(*guessed, f));
        CHECK(guessed->order <= order);
    }
}

TEST_CASE("the fitted order never exceeds the planted order") {
    // order 1 hiding inside order-2 bounds
    ExactSeq geo{0, {}, "geometric"};
    Rat v(1);
    for (int i = 0; i < 30; ++i) {
        geo.values.push_back(v);
        v *= Rat(3);
    }
    auto e = guess_recurrence(geo, 2, 1);
    REQUIRE(e.has_value());
    CHECK(e->order == 1);
    CHECK(*e == Equation(1, {RatFunc(Rat(-3))}));
}

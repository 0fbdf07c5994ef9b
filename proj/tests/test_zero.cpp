#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "seqring/parser.hpp"
#include "seqring/zero_analysis.hpp"

#include "testutil.hpp"

using namespace seqring;

namespace {

LinSystem fibonacci_system() {
    return companion_matrix(Equation(2, {RatFunc(Rat(-1)), RatFunc(Rat(-1))}));
}

ExactSeq fib(std::int64_t horizon) {
    return solve_equation(Equation(2, {RatFunc(Rat(-1)), RatFunc(Rat(-1))}), {Rat(0), Rat(1)},
                          0, horizon);
}

// 0 exactly on s, 1 elsewhere
ExactSeq vanishing_on(const APSet& s, std::int64_t horizon) {
    return indicator_sequence(ap_complement(s), 0, horizon);
}

} // namespace

TEST_CASE("zero positions of a stored window") {
    CHECK(zero_set(fib(40)) == std::set<std::uint64_t>{0});
    ExactSeq f{0, {Rat(1), Rat(0), Rat(2), Rat(0)}, "f"};
    CHECK(zero_set(f) == std::set<std::uint64_t>{1, 3});
    ExactSeq fact{0, {Rat(1), Rat(1), Rat(2), Rat(6)}, "fact"};
    CHECK(zero_set(fact).empty());
}

TEST_CASE("a zero-free tail gives an exact finite answer") {
    Decomposition d = decompose_zero_set(fib(400), 25, 100);
    CHECK(d.status == DecompStatus::ExactFinite);
    CHECK(d.set == ap_finite({0}));
    CHECK(status_name(d.status) == "exact-finite");
    CHECK(d.window_lo == 0);
    CHECK(d.window_hi == 400);
}

TEST_CASE("periodic zeros in the tail are reported with the least modulus") {
    Decomposition d = decompose_zero_set(vanishing_on(ap_progression(1, 2), 400), 25, 100);
    CHECK(d.status == DecompStatus::Conjectured);
    CHECK(d.set == ap_progression(1, 2));
    CHECK(status_name(d.status) == "conjectured");

    // the everywhere-zero sequence is one residue class mod 1
    ExactSeq zero{0, std::vector<Rat>(401, Rat(0)), "zero"};
    Decomposition dz = decompose_zero_set(zero, 25, 100);
    CHECK(dz.status == DecompStatus::Conjectured);
    CHECK(dz.set == ap_all());
}

TEST_CASE("sporadic zeros below the threshold survive exactly") {
    APSet target = ap_union(ap_finite({2, 7}), ap_progression(4, 5));
    Decomposition d = decompose_zero_set(vanishing_on(target, 400), 25, 100);
    CHECK(d.status == DecompStatus::Conjectured);
    CHECK(d.set.threshold == 8);
    CHECK(d.set.modulus == 5);
    CHECK(d.set.residues == std::set<std::uint64_t>{4});
    CHECK(d.set.sporadic == std::set<std::uint64_t>{2, 4, 7});
    CHECK(d.set == ap_canonicalize(target));

    // a stray point off the eventual pattern stays sporadic
    APSet stray = ap_union(ap_finite({4}), ap_progression(10, 7));
    Decomposition ds = decompose_zero_set(vanishing_on(stray, 400), 25, 100);
    CHECK(ds.set.threshold == 5);
    CHECK(ds.set.modulus == 7);
    CHECK(ds.set.sporadic == std::set<std::uint64_t>{4});
}

TEST_CASE("the reported set matches the observed zeros on the whole range") {
    auto rng = testutil::make_rng(61);
    for (int t = 0; t < 20; ++t) {
        APSet s = testutil::random_canonical_apset(rng, 12, 50);
        ExactSeq f = vanishing_on(s, 2000);
        Decomposition d = decompose_zero_set(f, 60, 400);
        std::set<std::uint64_t> zeros = zero_set(f);
        for (std::uint64_t i = 0; i <= 2000; ++i) {
            CHECK(ap_member(d.set, i) == (zeros.count(i) > 0));
        }
        CHECK(ap_equal_mod_finite(d.set, s));
        if (ap_is_finite(s)) {
            CHECK(d.status == DecompStatus::ExactFinite);
        } else {
            CHECK(d.status == DecompStatus::Conjectured);
            CHECK(d.set == s); // full equality, not just equality of tails
        }
    }
}

TEST_CASE("no small modulus fits a quadratic zero pattern") {
    ExactSeq f{0, {}, "square holes"};
    std::set<std::uint64_t> squares;
    for (std::uint64_t k = 0; k * k <= 400; ++k) squares.insert(k * k);
    for (std::int64_t i = 0; i <= 400; ++i) {
        f.values.push_back(squares.count(static_cast<std::uint64_t>(i)) ? Rat(0) : Rat(1));
    }
    Decomposition d = decompose_zero_set(f, 20, 100);
    CHECK(d.status == DecompStatus::Inconclusive);
    CHECK(status_name(d.status) == "inconclusive");
    CHECK(d.set == ap_finite(squares)); // the observed zeros, nothing invented
}

TEST_CASE("minimality of the fitted modulus") {
    // zeros on 4 + 10N: moduli 1 and 2 and 5 all fail on the window, 10 fits
    Decomposition d = decompose_zero_set(vanishing_on(ap_progression(4, 10), 400), 25, 100);
    CHECK(d.set.modulus == 10);
    for (std::uint64_t l : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(5)}) {
        // direct check that each residue class mod l is mixed on the tail window
        bool consistent = true;
        for (std::uint64_t r = 0; r < l; ++r) {
            bool any_zero = false, any_nonzero = false;
            for (std::uint64_t i = 300; i <= 400; ++i) {
                if (i % l != r) continue;
                (i % 10 == 4 ? any_zero : any_nonzero) = true;
            }
            if (any_zero && any_nonzero) consistent = false;
        }
        CHECK_FALSE(consistent);
    }
}

TEST_CASE("window preconditions are enforced") {
    ExactSeq f = fib(100);
    CHECK_THROWS_AS(decompose_zero_set(f, 30, 50), WindowTooSmallError);  // window < 2*period
    CHECK_THROWS_AS(decompose_zero_set(f, 10, 40), WindowTooSmallError);  // range < 4*window
    ExactSeq neg{-5, std::vector<Rat>(500, Rat(1)), "neg"};
    CHECK_THROWS_AS(decompose_zero_set(neg, 10, 20), WindowTooSmallError);
}

TEST_CASE("plain point sets decompose the same way") {
    std::set<std::uint64_t> odds;
    for (std::uint64_t i = 1; i <= 399; i += 2) odds.insert(i);
    Decomposition d = decompose_point_set(odds, 0, 400, 25, 100);
    CHECK(d.status == DecompStatus::Conjectured);
    CHECK(d.set == ap_progression(1, 2));

    Decomposition e = decompose_point_set({3, 5}, 0, 400, 25, 100);
    CHECK(e.status == DecompStatus::ExactFinite);
    CHECK(e.set == ap_finite({3, 5}));
}

TEST_CASE("shift-permuted idempotent count for the Fibonacci system") {
    PeriodBound pb = pv_period_lower_bound(fibonacci_system(), 1, 600, 30, 120);
    CHECK(pb.bound == 2);
    bool found = false;
    for (const PeriodWitness& w : pb.witnesses) {
        if (w.name == "det Y + 1") {
            found = true;
            CHECK(w.set == ap_progression(1, 2));
            CHECK(w.status == DecompStatus::Conjectured);
        }
    }
    CHECK(found);
    CHECK(pb.candidates_checked >= 5); // four entries and the determinant at least
}

TEST_CASE("systems with zero-free constant behaviour give the trivial bound") {
    MatK one(1);
    one.at(0, 0) = RatFunc(Rat(1));
    PeriodBound pb = pv_period_lower_bound(LinSystem(std::move(one)), 1, 600, 30, 120);
    CHECK(pb.bound == 1);
    CHECK(pb.witnesses.empty());
}

TEST_CASE("an order-two permutation is detected from entry zeros") {
    MatK swap(2);
    swap.at(0, 1) = RatFunc(Rat(1));
    swap.at(1, 0) = RatFunc(Rat(1));
    PeriodBound pb = pv_period_lower_bound(LinSystem(std::move(swap)), 1, 600, 30, 120);
    CHECK(pb.bound == 2);
    bool found = false;
    for (const PeriodWitness& w : pb.witnesses) {
        if (w.name == "Y[1][1]") {
            found = true;
            CHECK(w.set == ap_progression(1, 2));
        }
    }
    CHECK(found);
}

TEST_CASE("a sign alternation is caught through value periodicity") {
    MatK neg(1);
    neg.at(0, 0) = RatFunc(Rat(-1));
    PeriodBound pb = pv_period_lower_bound(LinSystem(std::move(neg)), 1, 600, 30, 120);
    CHECK(pb.bound == 2);
    bool even_part = false, odd_part = false;
    for (const PeriodWitness& w : pb.witnesses) {
        if (w.set == ap_progression(0, 2)) even_part = true;
        if (w.set == ap_progression(1, 2)) odd_part = true;
    }
    CHECK(even_part);
    CHECK(odd_part);
}

TEST_CASE("tail moduli are checked against a claimed period") {
    std::vector<APSet> tails{ap_progression(0, 2), ap_progression(1, 2)};
    CHECK(verify_period_bound(tails, 2));
    CHECK(verify_period_bound(tails, 4));
    CHECK_FALSE(verify_period_bound({ap_progression(4, 5)}, 2));
    CHECK(verify_period_bound({ap_finite({1, 2})}, 3)); // modulus one divides everything
    CHECK(verify_period_bound({}, 1));
}

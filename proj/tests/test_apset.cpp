#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "seqring/apset.hpp"

#include "testutil.hpp"

#include <numeric>

using namespace seqring;

namespace {

std::uint64_t sample_bound(const APSet& a, const APSet& b) {
    std::uint64_t l = std::lcm(a.modulus, b.modulus);
    return std::max(a.threshold, b.threshold) + 10 * l + 5;
}

} // namespace

TEST_CASE("membership splits at the threshold") {
    APSet odds = ap_progression(1, 2);
    CHECK(ap_member(odds, 7));
    CHECK_FALSE(ap_member(odds, 10));
    APSet s = ap_finite({5});
    CHECK(ap_member(s, 5));
    CHECK_FALSE(ap_member(s, 6));
    CHECK_FALSE(ap_member(ap_progression(5, 6), 6));
    CHECK(ap_member(ap_progression(5, 6), 11));
    CHECK_FALSE(ap_member(ap_empty(), 0));
    CHECK(ap_member(ap_all(), 123456));
}

TEST_CASE("canonical form uses the least modulus and threshold") {
    APSet raw;
    raw.threshold = 0;
    raw.modulus = 4;
    raw.residues = {0, 2};
    APSet c = ap_canonicalize(raw);
    CHECK(c.modulus == 2);
    CHECK(c.residues == std::set<std::uint64_t>{0});
    CHECK(c.threshold == 0);
    CHECK(c.sporadic.empty());

    // sporadic elements matching the tail pattern are pulled into it
    APSet raw2;
    raw2.threshold = 10;
    raw2.modulus = 1;
    raw2.residues = {0};
    for (std::uint64_t i = 0; i < 10; ++i) raw2.sporadic.insert(i);
    APSet c2 = ap_canonicalize(raw2);
    CHECK(c2 == ap_all());

    // a hole below the threshold keeps it up
    APSet raw3;
    raw3.threshold = 10;
    raw3.modulus = 2;
    raw3.residues = {0};
    raw3.sporadic = {0, 2, 4, 8}; // 6 missing
    APSet c3 = ap_canonicalize(raw3);
    CHECK(c3.threshold == 7); // 6 breaks the pattern, 7 and up follow it
    CHECK(c3.modulus == 2);
    CHECK(c3.sporadic == std::set<std::uint64_t>{0, 2, 4});
}

TEST_CASE("canonicalisation preserves membership and is idempotent") {
    auto rng = testutil::make_rng(31);
    for (int t = 0; t < 150; ++t) {
        APSet raw;
        raw.modulus = static_cast<std::uint64_t>(testutil::rand_int(rng, 1, 12));
        for (std::uint64_t r = 0; r < raw.modulus; ++r)
            if (testutil::rand_int(rng, 0, 1)) raw.residues.insert(r);
        raw.threshold = static_cast<std::uint64_t>(testutil::rand_int(rng, 0, 40));
        for (std::uint64_t i = 0; i < raw.threshold; ++i)
            if (testutil::rand_int(rng, 0, 2) == 0) raw.sporadic.insert(i);
        APSet c = ap_canonicalize(raw);
        for (std::uint64_t i = 0; i < raw.threshold + 10 * raw.modulus; ++i)
            CHECK(ap_member(c, i) == ap_member(raw, i));
        CHECK(ap_canonicalize(c) == c);
        CHECK(raw.modulus % c.modulus == 0);
        CHECK(c.threshold <= raw.threshold);
        for (std::uint64_t s : c.sporadic) CHECK(s < c.threshold);
        for (std::uint64_t r : c.residues) CHECK(r < c.modulus);
    }
}

TEST_CASE("intersection follows the Chinese remainder pattern") {
    APSet a = ap_progression(1, 2);
    APSet b = ap_progression(2, 3);
    CHECK(ap_intersect(a, b) == ap_progression(5, 6));
    CHECK(ap_intersect(a, ap_all()) == a);
    CHECK(ap_intersect(ap_progression(0, 2), ap_progression(1, 2)) == ap_empty());
    CHECK(ap_intersect(a, ap_empty()) == ap_empty());
}

TEST_CASE("union merges residues and keeps strays sporadic") {
    APSet u = ap_union(ap_finite({3}), ap_progression(0, 2));
    CHECK(u.modulus == 2);
    CHECK(u.residues == std::set<std::uint64_t>{0});
    CHECK(ap_member(u, 3));
    CHECK_FALSE(ap_member(u, 5));
    CHECK(ap_union(ap_progression(0, 2), ap_progression(1, 2)) == ap_all());
    CHECK(ap_union(ap_progression(0, 4), ap_progression(2, 4)) == ap_progression(0, 2));
}

TEST_CASE("complement flips the tail and the sporadic part") {
    CHECK(ap_complement(ap_progression(0, 2)) == ap_progression(1, 2));
    CHECK(ap_complement(ap_all()) == ap_empty());
    CHECK(ap_complement(ap_empty()) == ap_all());
    APSet c = ap_complement(ap_finite({5}));
    CHECK(c.threshold == 6);
    CHECK(c.modulus == 1);
    CHECK(c.residues == std::set<std::uint64_t>{0});
    CHECK(c.sporadic == std::set<std::uint64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("set algebra matches pointwise membership") {
    auto rng = testutil::make_rng(32);
    for (int t = 0; t < 80; ++t) {
        APSet a = testutil::random_canonical_apset(rng);
        APSet b = testutil::random_canonical_apset(rng);
        APSet c = testutil::random_canonical_apset(rng);
        APSet i = ap_intersect(a, b);
        APSet u = ap_union(a, b);
        APSet na = ap_complement(a);
        std::uint64_t bound = std::max(sample_bound(a, b), c.threshold + 10 * c.modulus);
        for (std::uint64_t x = 0; x <= bound; ++x) {
            bool ina = ap_member(a, x), inb = ap_member(b, x);
            CHECK(ap_member(i, x) == (ina && inb));
            CHECK(ap_member(u, x) == (ina || inb));
            CHECK(ap_member(na, x) == !ina);
        }
        // De Morgan and distributivity at the set level
        CHECK(ap_complement(ap_union(a, b)) == ap_intersect(na, ap_complement(b)));
        CHECK(ap_intersect(a, ap_union(b, c)) ==
              ap_union(ap_intersect(a, b), ap_intersect(a, c)));
        CHECK(ap_union(a, ap_intersect(a, b)) == a);
        CHECK(ap_complement(na) == a);
        // results of the algebra come out canonical
        CHECK(ap_canonicalize(i) == i);
        CHECK(ap_canonicalize(u) == u);
        CHECK(ap_canonicalize(na) == na);
    }
}

TEST_CASE("equality up to finitely many exceptions ignores low indices") {
    APSet a = ap_progression(1, 2);
    APSet b = ap_union(ap_finite({0, 4}), a);
    CHECK(ap_equal_mod_finite(a, b));
    CHECK_FALSE(ap_equal_mod_finite(a, ap_progression(0, 2)));
    CHECK(ap_equal_mod_finite(ap_finite({1, 2, 3}), ap_empty()));
    CHECK_FALSE(ap_equal_mod_finite(ap_all(), ap_empty()));

    auto rng = testutil::make_rng(33);
    for (int t = 0; t < 60; ++t) {
        APSet s = testutil::random_canonical_apset(rng);
        // adding or removing finitely many points does not change the class
        APSet plus = ap_union(s, ap_finite({101, 202}));
        APSet minus = ap_intersect(s, ap_complement(ap_finite({7})));
        CHECK(ap_equal_mod_finite(s, plus));
        CHECK(ap_equal_mod_finite(s, minus));
        CHECK(ap_equal_mod_finite(plus, minus));
        CHECK(ap_equal_mod_finite(s, s));
    }
}

TEST_CASE("finite sets and emptiness") {
    CHECK(ap_is_finite(ap_finite({1, 2, 3})));
    CHECK(ap_is_finite(ap_empty()));
    CHECK_FALSE(ap_is_finite(ap_progression(0, 7)));
    CHECK(ap_empty() == APSet{0, 1, {}, {}});
    APSet f = ap_finite({9, 4});
    CHECK(f.threshold == 10);
    CHECK(f.residues.empty());
    CHECK(f.sporadic == std::set<std::uint64_t>{4, 9});
}

TEST_CASE("display form lists sporadic points then progressions") {
    CHECK(ap_str(ap_empty()) == "{}");
    CHECK(ap_str(ap_progression(1, 2)) == "1 + 2N");
    CHECK(ap_str(ap_finite({2, 4, 7})) == "{2, 4, 7}");
    APSet mixed = ap_union(ap_finite({2, 7}), ap_progression(4, 5));
    CHECK(ap_str(mixed) == "{2, 4, 7} u 9 + 5N");
}

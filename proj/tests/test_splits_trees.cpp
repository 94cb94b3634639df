#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace midtree;
using testutil::set_of;

namespace {

// 4-leaf caterpillar on {a,b,c,d}: pendants plus the middle {c,d}|{a,b}.
TreeMetric caterpillar4() {
    TreeMetric t(testutil::letters(4));
    for (std::size_t x = 0; x < 4; ++x) t.set_length(Split::leaf(4, x), Rational(1));
    t.set_length(Split::of(set_of(4, {2, 3})), Rational(1));
    return t;
}

} // namespace

TEST_CASE("split canonicalization and compatibility") {
    Split nested_small = Split::of(set_of(4, {1}));
    Split nested_big = Split::of(set_of(4, {1, 2}));
    Split crossing = Split::of(set_of(4, {2, 3}));
    CHECK(is_compatible(nested_small, nested_big));
    CHECK(!is_compatible(nested_big, crossing));

    // Both orientations name the same edge.
    CHECK(Split::of(set_of(4, {1, 2})) == Split::of(set_of(4, {0, 3})));
    CHECK_THROWS_AS((void)Split::of(IndexSet(4)), Error);
}

TEST_CASE("tree validation reports incompatible positive pairs") {
    TreeMetric t(testutil::letters(4));
    t.set_length(Split::of(set_of(4, {1, 2})), Rational(1));
    t.set_length(Split::of(set_of(4, {2, 3})), Rational(1));
    auto rep = validate_tree(t);
    CHECK(!rep.ok);
    CHECK(rep.incompatible.size() == 1);

    // Zero length on one of them removes the conflict.
    t.set_length(Split::of(set_of(4, {2, 3})), Rational(0));
    CHECK(validate_tree(t).ok);
}

TEST_CASE("interval members walk the path between two edges") {
    TreeMetric t = caterpillar4();
    Split pa = Split::leaf(4, 0);
    Split pd = Split::leaf(4, 3);
    auto members = interval_members(t, EdgeInterval::closed(pa, pd));
    REQUIRE(members.size() == 3);
    CHECK(std::count(members.begin(), members.end(), pa) == 1);
    CHECK(std::count(members.begin(), members.end(), pd) == 1);
    CHECK(std::count(members.begin(), members.end(), Split::of(set_of(4, {2, 3}))) == 1);

    auto half = interval_members(t, EdgeInterval::half_open(pa, pd));
    CHECK(half.size() == 2);
    CHECK(std::count(half.begin(), half.end(), pd) == 0);
}

TEST_CASE("interval endpoints must be mutually compatible") {
    TreeMetric t = caterpillar4();
    Split a = Split::of(set_of(4, {1, 2}));
    Split b = Split::of(set_of(4, {2, 3}));
    CHECK_THROWS_AS((void)interval_members(t, EdgeInterval::closed(a, b)), Error);
}

TEST_CASE("path sums under the doubled convention") {
    TreeMetric t = caterpillar4();
    // Adjacent leaves on opposite sides of the unit middle edge.
    CHECK(path_sum(t, EdgeInterval::open(Split::leaf(4, 1), Split::leaf(4, 2))) == 2);
    // Closed interval on a single leaf edge of length L gives 2L.
    t.set_length(Split::leaf(4, 0), Rational(7));
    CHECK(path_sum(t, EdgeInterval::closed(Split::leaf(4, 0), Split::leaf(4, 0))) == 14);
    CHECK(path_sum(t, EdgeInterval::half_open(Split::leaf(4, 0), Split::leaf(4, 0))) == 0);
}

TEST_CASE("chain tree spine sums") {
    TreeMetric t = testutil::chain_tree(4);
    Split p01 = Split::leaf(12, x0_index(0, 1));
    Split p11 = Split::leaf(12, x0_index(1, 1));
    // One unit tail edge separates positions 0 and 1.
    CHECK(path_sum(t, EdgeInterval::open(p01, p11)) == 2);
}

TEST_CASE("betweenness is the chain condition") {
    Split s1 = Split::of(set_of(5, {1}));
    Split s12 = Split::of(set_of(5, {1, 2}));
    Split s123 = Split::of(set_of(5, {1, 2, 3}));
    Split s23 = Split::of(set_of(5, {2, 3}));
    CHECK(betweenness(s1, s12, s123));
    CHECK(!betweenness(s1, s23, s12));
}

TEST_CASE("leaf distances") {
    TreeMetric star(testutil::letters(3));
    star.set_length(Split::leaf(3, 0), Rational(1));
    star.set_length(Split::leaf(3, 1), Rational(2));
    star.set_length(Split::leaf(3, 2), Rational(3));
    CHECK(leaf_distance(star, 0, 1) == 3);
    CHECK(leaf_distance(star, 0, 0) == 0);

    TreeMetric chain = testutil::chain_tree(1);
    CHECK(leaf_distance(chain, x0_index(0, 1), x0_index(1, 1)) == 111);

    // Symmetry and triangle inequality on a random tree.
    std::mt19937_64 rng(7);
    TreeMetric t = testutil::random_tree(rng, 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a; b < 6; ++b) {
            CHECK(leaf_distance(t, a, b) == leaf_distance(t, b, a));
            for (std::size_t c = 0; c < 6; ++c)
                CHECK(leaf_distance(t, a, b) <= leaf_distance(t, a, c) + leaf_distance(t, c, b));
        }
}

TEST_CASE("rationals survive tree length bookkeeping") {
    TreeMetric t(testutil::letters(3));
    t.set_length(Split::leaf(3, 1), parse_rational("7/3"));
    t.add_length(Split::leaf(3, 1), parse_rational("2/3"));
    CHECK(t.length(Split::leaf(3, 1)) == 3);
    CHECK_THROWS_AS(t.add_length(Split::leaf(3, 1), Rational(-5)), Error);
}

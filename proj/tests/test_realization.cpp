#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace midtree;
using testutil::set_of;

TEST_CASE("two-element structure against the one-edge tree") {
    GroundSet g = testutil::letters(2);
    MidpointsStructure m(g);
    m.set_midpoint(0, 1, set_of(2, {1}));

    TreeMetric t(g);
    t.set_length(Split::leaf(2, 1), Rational(1));
    RealizationReport rep = check_realization(m, t, {.collect_all = true});
    CHECK(rep.ok);
    CHECK(rep.pairs_checked == 2);
    for (const auto& chk : rep.all_checks) {
        CHECK(chk.lhs == 2);
        CHECK(chk.rhs == 0);
    }

    TreeMetric zero(g);
    zero.set_length(Split::leaf(2, 1), Rational(0));
    RealizationReport bad = check_realization(m, zero);
    CHECK(!bad.ok);
    CHECK(bad.violations.size() == 2);  // 0 > 0 fails in both orders
}

TEST_CASE("the chain tree realizes the variable structure") {
    MidpointsStructure m0 = build_variable_structure(4);
    TreeMetric t = testutil::chain_tree(4);
    RealizationReport rep = check_realization(m0, t);
    CHECK(rep.ok);
    CHECK(rep.pairs_checked == 12 * 11);
    CHECK(rep.violations.empty());

    // Midpoint images must be positive on any verified realization.
    for (std::size_t j = 1; j < 12; ++j)
        for (std::size_t i = 0; i < j; ++i)
            CHECK(t.length(Split::of(m0.midpoint(i, j))) > 0);
}

TEST_CASE("deriving the order information back off the chain tree") {
    CHECK(derive_from_tree(testutil::chain_tree(4)) == build_variable_structure(4));
}

TEST_CASE("derivation on a separated star") {
    TreeMetric star(testutil::letters(3));
    star.set_length(Split::leaf(3, 0), Rational(1));
    star.set_length(Split::leaf(3, 1), Rational(2));
    star.set_length(Split::leaf(3, 2), Rational(3));
    MidpointsStructure m = derive_from_tree(star);
    CHECK(m.midpoint(0, 1) == set_of(3, {1}));
    CHECK(m.midpoint(0, 2) == set_of(3, {2}));
    CHECK(m.midpoint(1, 2) == set_of(3, {2}));
    CHECK(check_realization(m, star).ok);
}

TEST_CASE("ties are rejected with the offending elements named") {
    TreeMetric star(testutil::letters(3));
    star.set_length(Split::leaf(3, 0), Rational(1));
    star.set_length(Split::leaf(3, 1), Rational(1));
    star.set_length(Split::leaf(3, 2), Rational(2));
    try {
        (void)derive_from_tree(star);
        FAIL("expected GENERIC_TIE");
    } catch (const Error& e) {
        CHECK(e.code() == Err::GenericTie);
    }
}

TEST_CASE("checker agrees with the distance-semantics oracle") {
    std::mt19937_64 rng(20240812);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 3 + rng() % 4;  // 3..6
        TreeMetric t = testutil::random_tree(rng, n);
        MidpointsStructure m = (trial % 3 == 0 && [&] {
                                   try {
                                       (void)derive_from_tree(t);
                                       return true;
                                   } catch (const Error&) {
                                       return false;
                                   }
                               }())
                                   ? derive_from_tree(t)
                                   : random_structure(plain_ground(n), rng);
        bool by_intervals = check_realization(m, t).ok;
        bool by_distances = testutil::realizes_by_distances(m, t);
        bool by_triples = testutil::realizes_triples_by_distances(to_triples(m), t);
        CHECK(by_intervals == by_distances);
        CHECK(by_intervals == by_triples);
        if (by_intervals) ++nontrivial;
    }
    CHECK(nontrivial > 10);  // the derive branch guarantees positives
}

TEST_CASE("derived structures are realized by their source tree") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 3 + rng() % 4;
        TreeMetric t = testutil::random_generic_tree(rng, n);
        MidpointsStructure m = derive_from_tree(t);
        CHECK(check_realization(m, t).ok);
    }
}

TEST_CASE("midpoints geometry collects images and leaf edges") {
    GroundSet g = testutil::letters(2);
    MidpointsStructure m(g);
    m.set_midpoint(0, 1, set_of(2, {1}));
    CHECK(midpoints_geometry(m).size() == 1);

    CHECK(midpoints_geometry(build_variable_structure(4)).size() == 17);  // 12 pendants + 5 tails

    MidpointsStructure gadget = build_clause_gadget();
    CHECK(midpoints_geometry(gadget).size() == 64);  // 48 pendants + 16 cherries
}

TEST_CASE("halving every sum never changes a verdict") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 3 + rng() % 3;
        TreeMetric t = testutil::random_tree(rng, n);
        MidpointsStructure m = random_structure(plain_ground(n), rng);
        RealizationReport rep = check_realization(m, t, {.collect_all = true});
        for (const auto& chk : rep.all_checks)
            CHECK((chk.lhs > chk.rhs) == (chk.lhs / 2 > chk.rhs / 2));
    }
}

TEST_CASE("mismatched ground sets are a hard error") {
    MidpointsStructure m(testutil::letters(3));
    m.set_midpoint(0, 1, set_of(3, {1}));
    m.set_midpoint(0, 2, set_of(3, {2}));
    m.set_midpoint(1, 2, set_of(3, {2}));
    TreeMetric t(testutil::letters(4));
    CHECK_THROWS_AS((void)check_realization(m, t), Error);
}

// test_oracles.cpp
// Frozen reference values.  These literals were produced by the oracle
// routines themselves and cross-checked by hand against the published
// flat-connection data for the small Brieskorn spheres, so they guard the
// oracles against regressions before the oracles are trusted to judge the
// library.

#include <set>

#include "doctest.h"
#include "oracles.hpp"

namespace {
using oracle::frac;
using oracle::make_frac;

std::set<frac> fr(std::initializer_list<frac> xs) { return std::set<frac>(xs); }
} // namespace

TEST_CASE("oracle connection counts on the small spheres") {
    CHECK(oracle::count_flat({2, 3, 5}) == 2);
    CHECK(oracle::count_flat({2, 3, 7}) == 2);
    CHECK(oracle::count_flat({2, 3, 11}) == 4);
    CHECK(oracle::count_flat({2, 3, 13}) == 4);
    CHECK(oracle::count_flat({2, 3, 17}) == 6);
    CHECK(oracle::count_flat({3, 5, 7}) == 8);
    CHECK(oracle::count_flat({2, 3, 71}) == 24);
}

TEST_CASE("oracle cs sets on the small spheres") {
    CHECK(oracle::cs_values({2, 3, 5}) == fr({{71, 120}, {119, 120}}));
    CHECK(oracle::cs_values({2, 3, 7}) == fr({{47, 168}, {143, 168}}));
    CHECK(oracle::cs_values({2, 3, 11}) ==
          fr({{167, 264}, {215, 264}, {239, 264}, {263, 264}}));
    CHECK(oracle::cs_values({2, 3, 13}) ==
          fr({{95, 312}, {263, 312}, {287, 312}, {311, 312}}));
    CHECK(oracle::cs_values({3, 5, 7}) ==
          fr({{131, 420}, {41, 105}, {59, 105}, {299, 420}, {311, 420}, {89, 105},
              {104, 105}, {419, 420}}));
}

TEST_CASE("oracle R invariants") {
    CHECK(oracle::r_invariant({2, 3, 5}, 1) == -2);
    CHECK(oracle::r_invariant({2, 3, 5}, 7) == 2);
    CHECK(oracle::r_invariant({2, 3, 7}, 11) == 0);
    CHECK(oracle::r_invariant({2, 3, 7}, 5) == -4);
    CHECK(oracle::r_invariant({2, 3, 11}, 19) == 10);
    CHECK(oracle::r_invariant({2, 3, 11}, 7) == 0);
    CHECK(oracle::r_invariant({2, 3, 11}, 5) == -2);
    CHECK(oracle::r_invariant({2, 3, 11}, 1) == -2);
    CHECK(oracle::r_invariant({2, 3, 13}, 23) == 8);
    CHECK(oracle::r_invariant({2, 3, 13}, 5) == -4);
}

TEST_CASE("oracle fraction helper reduces and fixes signs") {
    CHECK(make_frac(2, 4) == frac{1, 2});
    CHECK(make_frac(-3, -6) == frac{1, 2});
    CHECK(make_frac(3, -6) == frac{-1, 2});
    CHECK(make_frac(0, 7) == frac{0, 1});
}

// test_seifert_flat.cpp
// Seifert validation, the flat-connection enumeration against the frozen
// references, and the oracle cross-checks on random triples.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "floer/errors.hpp"
#include "floer/flat.hpp"
#include "floer/seifert.hpp"
#include "oracles.hpp"

using namespace floer;

namespace {

struct GoldenRow {
    const char* cs;
    int grading;
    i64 e;
    std::vector<i64> ls;
    int eps;
};

void check_table(const std::vector<i64>& mults, const std::vector<GoldenRow>& rows) {
    SeifertData y = validate_seifert(mults);
    auto conns = enumerate_flat_connections(y);
    REQUIRE(conns.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(conns[i].cs_value == Rat::parse(rows[i].cs));
        CHECK(conns[i].grading == rows[i].grading);
        CHECK(conns[i].e_label == rows[i].e);
        CHECK(conns[i].rotation_numbers == rows[i].ls);
        CHECK(conns[i].epsilon == rows[i].eps);
        CHECK(conns[i].irreducible);
    }
}

std::vector<i64> random_triple(std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> pick(2, 63);
    for (;;) {
        std::vector<i64> t{pick(rng), pick(rng), pick(rng)};
        std::sort(t.begin(), t.end());
        if (t[0] * t[1] * t[2] > 2000) continue;
        if (std::gcd(t[0], t[1]) > 1 || std::gcd(t[0], t[2]) > 1 || std::gcd(t[1], t[2]) > 1)
            continue;
        return t;
    }
}

} // namespace

TEST_CASE("validate_seifert rejects bad input") {
    CHECK_THROWS_AS(validate_seifert({2, 3}), TooFewFibers);
    CHECK_THROWS_AS(validate_seifert({2, 4, 5}), NotCoprime);
    CHECK_THROWS_AS(validate_seifert({1, 3, 5}), UnsupportedInput);
    CHECK_THROWS_AS(validate_seifert({6, 10, 15}), NotCoprime);
    CHECK_THROWS_AS(validate_seifert({2, i64(3037000501), i64(3037000507)}), OverflowError);
}

TEST_CASE("normalization lands in the all-odd gauge") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        SeifertData y = validate_seifert(random_triple(rng));
        i128 sum = i128(y.b0) * y.a;
        for (int i = 0; i < 3; ++i) {
            CHECK(y.b[i] % 2 == 1);
            CHECK(y.b[i] > 0);
            CHECK(y.b[i] < 2 * y.multiplicities[i]);
            sum += i128(y.b[i]) * (y.a / y.multiplicities[i]);
        }
        CHECK(sum == 1); // e(Sigma) = -1/a in this gauge
    }
}

TEST_CASE("enumerate_flat_connections rejects more than three fibers") {
    SeifertData y = validate_seifert({2, 3, 5, 7});
    CHECK_THROWS_AS(enumerate_flat_connections(y), UnsupportedInput);
}

TEST_CASE("Sigma(2,3,5) table") {
    check_table({2, 3, 5}, {{"71/120", 5, 7, {1, 1, 3}, -1}, {"119/120", 1, 1, {1, 1, 1}, -1}});
}

TEST_CASE("Sigma(2,3,7) table") {
    check_table({2, 3, 7}, {{"47/168", 3, 11, {1, 1, 3}, -1}, {"143/168", 7, 5, {1, 1, 5}, -1}});
}

TEST_CASE("Sigma(2,3,11) table") {
    check_table({2, 3, 11}, {{"167/264", 5, 19, {1, 1, 7}, -1},
                             {"215/264", 3, 7, {1, 1, 9}, -1},
                             {"239/264", 1, 5, {1, 1, 3}, -1},
                             {"263/264", 1, 1, {1, 1, 5}, -1}});
}

TEST_CASE("Sigma(2,3,13) table") {
    check_table({2, 3, 13}, {{"95/312", 3, 23, {1, 1, 5}, -1},
                             {"263/312", 1, 7, {1, 1, 3}, -1},
                             {"287/312", 7, 5, {1, 1, 9}, -1},
                             {"311/312", 7, 1, {1, 1, 7}, -1}});
}

TEST_CASE("Sigma(3,5,7) table mixes both central signs") {
    check_table({3, 5, 7}, {{"131/420", 1, 17, {1, 3, 3}, -1},
                            {"41/105", 7, 16, {2, 4, 2}, +1},
                            {"59/105", 7, 32, {2, 2, 4}, +1},
                            {"299/420", 5, 11, {1, 1, 3}, -1},
                            {"311/420", 5, 23, {1, 3, 5}, -1},
                            {"89/105", 3, 8, {2, 2, 6}, +1},
                            {"104/105", 3, 2, {2, 2, 2}, +1},
                            {"419/420", 1, 1, {1, 1, 1}, -1}});
}

TEST_CASE("central sign forces uniform rotation parity") {
    SeifertData y = validate_seifert({3, 5, 7});
    for (const auto& c : enumerate_flat_connections(y))
        for (i64 l : c.rotation_numbers)
            CHECK(l % 2 == (c.epsilon == -1 ? 1 : 0));
}

TEST_CASE("label orbits are cs and grading consistent") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 6; ++trial) {
        SeifertData y = validate_seifert(random_triple(rng));
        for (const auto& c : enumerate_flat_connections(y)) {
            auto cands = e_label_candidates(y, c.rotation_numbers, c.epsilon);
            CHECK(c.e_label == *std::min_element(cands.begin(), cands.end()));
            for (i64 e : cands) {
                CHECK(((r_invariant(y, e) + 3) % 8 + 8) % 8 == c.grading);
                CHECK((e % 2 != 0) == (c.epsilon == -1));
            }
            CHECK(cs_invariant(y, c) == c.cs_value);
        }
    }
}

TEST_CASE("gradings agree with the independent R evaluation") {
    for (const std::vector<i64>& mults :
         {std::vector<i64>{2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {2, 3, 13}, {3, 5, 7}}) {
        SeifertData y = validate_seifert(mults);
        for (const auto& c : enumerate_flat_connections(y)) {
            i64 r_ref = oracle::r_invariant(mults, c.e_label);
            CHECK(r_invariant(y, c.e_label) == r_ref);
            CHECK(c.grading == ((r_ref + 3) % 8 + 8) % 8);
        }
    }
}

TEST_CASE("enumeration is deterministic and sorted by cs") {
    SeifertData y = validate_seifert({3, 5, 7});
    auto a = enumerate_flat_connections(y);
    auto b = enumerate_flat_connections(y);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].e_label == b[i].e_label);
        CHECK(a[i].rotation_numbers == b[i].rotation_numbers);
        if (i + 1 < a.size()) CHECK(a[i].cs_value <= a[i + 1].cs_value);
    }
}

TEST_CASE("random triples match both oracles") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<i64> mults = random_triple(rng);
        CAPTURE(mults[0]);
        CAPTURE(mults[1]);
        CAPTURE(mults[2]);
        SeifertData y = validate_seifert(mults);
        auto conns = enumerate_flat_connections(y);
        CHECK(i64(conns.size()) == oracle::count_flat(mults));
        std::set<oracle::frac> got;
        for (const auto& c : conns)
            got.insert(oracle::make_frac(c.cs_value.num(), c.cs_value.den()));
        CHECK(got == oracle::cs_values(mults));
    }
}

TEST_CASE("build_filtered_generators mirrors the enumeration") {
    SeifertData y = validate_seifert({2, 3, 11});
    FilteredComplex c = build_filtered_generators(y);
    REQUIRE(c.size() == 4);
    CHECK_FALSE(c.differential_incomplete); // all gradings odd
    CHECK(c.generators[0].id == "e19");
    CHECK(c.generators[0].cs_level == Rat(167, 264));
    for (const auto& row : c.d)
        for (i64 v : row) CHECK(v == 0);

    // three exceptional fibers put every grading in a single parity class,
    // so the zero differential is complete here too
    FilteredComplex m = build_filtered_generators(validate_seifert({3, 5, 7}));
    REQUIRE(m.size() == 8);
    CHECK_FALSE(m.differential_incomplete);
    for (const auto& g : m.generators) CHECK(g.grading % 2 == 1);
}

TEST_CASE("grading normalization pin: e = 1 on Sigma(2,3,5) sits in degree 1") {
    SeifertData y = validate_seifert({2, 3, 5});
    auto conns = enumerate_flat_connections(y);
    for (const auto& c : conns)
        if (c.e_label == 1) CHECK(c.grading == 1);
}

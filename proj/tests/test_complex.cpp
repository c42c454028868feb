// test_complex.cpp
// Filtered complex construction rules, restriction, cohomology, the
// coboundary solver, and the Smith normal form identities.

#include <random>

#include "doctest.h"
#include "floer/complex.hpp"
#include "floer/errors.hpp"
#include "floer/snf.hpp"
#include "snf_check.hpp"

using namespace floer;

namespace {

Generator gen(const char* id, int grading, i64 num, i64 den) {
    return {id, grading, Rat(num, den)};
}

FilteredComplex two_step() {
    // x in degree 1 at cs 1/2, y in degree 0 at cs 1/4, dx = 2y
    std::vector<Generator> gens{gen("x", 1, 1, 2), gen("y", 0, 1, 4)};
    Mat d{{0, 0}, {2, 0}};
    return make_complex(gens, d);
}

} // namespace

TEST_CASE("make_complex validates ids, ranges, and the pairing rule") {
    CHECK_THROWS_AS(make_complex({gen("x", 1, 1, 2), gen("x", 0, 1, 4)}, Mat{}),
                    UnsupportedInput);
    CHECK_THROWS_AS(make_complex({gen("x", 8, 1, 2)}, Mat{}), DegreeMismatch);
    CHECK_THROWS_AS(make_complex({gen("x", 1, 3, 2)}, Mat{}), UnsupportedInput);
    CHECK_THROWS_AS(make_complex({gen("x", 1, -1, 2)}, Mat{}), UnsupportedInput);

    // degree difference 2 cannot carry a differential entry
    CHECK_THROWS_AS(make_complex({gen("a", 3, 1, 2), gen("b", 1, 1, 4)}, Mat{{0, 0}, {1, 0}}),
                    DegreeMismatch);
    // right degrees but the target does not sit below the source
    CHECK_THROWS_AS(make_complex({gen("a", 3, 1, 4), gen("b", 2, 1, 2)}, Mat{{0, 0}, {1, 0}}),
                    DegreeMismatch);
    // across the 0 -> 7 wrap there is no cs constraint
    CHECK_NOTHROW(make_complex({gen("a", 0, 1, 4), gen("b", 7, 1, 2)}, Mat{{0, 0}, {1, 0}}));
}

TEST_CASE("make_complex enforces d*d = 0 unless flagged incomplete") {
    std::vector<Generator> gens{gen("a", 2, 3, 4), gen("b", 1, 1, 2), gen("c", 0, 1, 4)};
    Mat bad{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}; // d a = b, d b = c, so d(d a) = c
    CHECK_THROWS_AS(make_complex(gens, bad), InternalCheckFailure);
    CHECK_NOTHROW(make_complex(gens, bad, true));
    Mat good{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}};
    CHECK_NOTHROW(make_complex(gens, good));
}

TEST_CASE("restriction keeps strictly lower levels and re-checks d*d") {
    FilteredComplex c = two_step();
    FilteredComplex r = restrict_complex(c, RatInf(Rat(1, 3)));
    REQUIRE(r.size() == 1);
    CHECK(r.generators[0].id == "y");
    CHECK(restrict_complex(c, RatInf::infinity()).size() == 2);
    CHECK_THROWS_AS(restrict_complex(c, RatInf(Rat(1, 4))), ForbiddenLevel);
    CHECK_THROWS_AS(restrict_complex(c, RatInf(Rat(5, 4))), ForbiddenLevel); // frac(r) test
    CHECK(restrict_complex(c, RatInf(Rat(0))).size() == 0);
}

TEST_CASE("cohomology of the two-step complex") {
    FilteredComplex c = two_step();
    AbelianGroup h0 = cohomology(c, 0, RatInf::infinity());
    CHECK(h0.trivial());
    AbelianGroup h1 = cohomology(c, 1, RatInf::infinity());
    CHECK(h1.free_rank == 0);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == 2); // delta^0 has Smith form (2)
    // below the level of x the complex is just y
    AbelianGroup h0r = cohomology(c, 0, RatInf(Rat(1, 3)));
    CHECK(h0r.free_rank == 1);
    CHECK(h0r.torsion.empty());
    CHECK(cohomology(c, 1, RatInf(Rat(1, 3))).trivial());
    for (int i = 2; i < 8; ++i) CHECK(cohomology(c, i, RatInf::infinity()).trivial());
}

TEST_CASE("cohomology refuses an incomplete differential") {
    FilteredComplex c =
        make_complex({gen("a", 2, 3, 4), gen("b", 1, 1, 2)}, Mat{{0, 0}, {1, 0}}, true);
    CHECK_THROWS_AS(cohomology(c, 1, RatInf::infinity()), DifferentialIncomplete);
    CHECK_THROWS_AS(is_coboundary(CoChain{1, {{"b", 1}}}, c, RatInf::infinity()),
                    DifferentialIncomplete);
}

TEST_CASE("is_coboundary finds integer witnesses exactly") {
    FilteredComplex c = two_step();
    // delta^0 (y*) = 2 x*, so 2 x* cobounds and x* does not
    auto w = is_coboundary(CoChain{1, {{"x", 2}}}, c, RatInf::infinity());
    REQUIRE(w.has_value());
    CHECK(w->degree == 0);
    REQUIRE(w->coefficients.count("y") == 1);
    CHECK(w->coefficients.at("y") == -1);
    CHECK_FALSE(is_coboundary(CoChain{1, {{"x", 1}}}, c, RatInf::infinity()).has_value());
    CHECK_FALSE(is_coboundary(CoChain{1, {{"x", 3}}}, c, RatInf::infinity()).has_value());

    // wrong stated degree
    CHECK_THROWS_AS(is_coboundary(CoChain{2, {{"x", 1}}}, c, RatInf::infinity()),
                    DegreeMismatch);
    // support outside the restriction
    CHECK_THROWS_AS(is_coboundary(CoChain{1, {{"x", 1}}}, c, RatInf(Rat(1, 3))),
                    DegreeMismatch);
    // zero coefficients outside the restriction are harmless, and the zero
    // cochain cobounds trivially
    CHECK(is_coboundary(CoChain{1, {{"x", 0}, {"y", 0}}}, c, RatInf(Rat(1, 3))).has_value());
}

TEST_CASE("admissible_levels sorts distinct values and lifts zero") {
    FilteredComplex c = make_complex(
        {gen("a", 1, 1, 2), gen("b", 5, 1, 2), gen("c", 0, 0, 1), gen("d", 3, 1, 4)}, Mat{});
    auto levels = admissible_levels(c);
    REQUIRE(levels.size() == 4);
    CHECK(levels[0] == Rat(0));
    CHECK(levels[1] == Rat(1, 4));
    CHECK(levels[2] == Rat(1, 2));
    CHECK(levels[3] == Rat(1));
}

TEST_CASE("smith_normal_form on a known matrix") {
    Mat m{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    SmithResult s = smith_normal_form(m);
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 2);
    CHECK(s.D[2][2] == 156);
    CHECK(mat_mul(mat_mul(s.U, m), s.V) == s.D);
    i64 du = determinant(s.U), dv = determinant(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
}

TEST_CASE("solve_integer matches hand examples") {
    Mat m{{2, 0}, {0, 3}};
    auto x = solve_integer(m, {4, -9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == -3);
    CHECK_FALSE(solve_integer(m, {1, 0}).has_value());
    CHECK_FALSE(solve_integer(Mat{{0, 0}}, {5}).has_value());
    auto z = solve_integer(Mat{{0, 0}}, {0});
    REQUIRE(z.has_value());
}

TEST_CASE("smith normal form identities on random matrices") {
    // U and V can carry entries far beyond int64, so the identities are
    // verified in arbitrary precision (snf_check.hpp)
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(0, 6), val(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        size_t rows = dim(rng), cols = dim(rng);
        Mat m(rows, std::vector<i64>(cols));
        for (auto& row : m)
            for (auto& v : row) v = val(rng);
        SmithResult s = smith_normal_form(m);
        std::string why = snf_check::identity_failures(m, s);
        CAPTURE(trial);
        CHECK(why == "");
    }
}

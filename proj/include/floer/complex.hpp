// complex.hpp
// Filtered cochain complexes with exact rational filtration levels and an
// integer differential.  A generator sits at its canonical lift: the [0,1)
// representative of its Chern-Simons value with its stated mod-8 grading;
// the other lifts are (cs + n, grading + 8n).  The differential d[b][a]
// (b = target, a = source) may be nonzero only when the lift pairing
// admits index difference exactly one:
//   grading(b) = grading(a) - 1 (mod 8), and
//   cs(b) < cs(a) when the canonical gradings differ by exactly 1
//   (no cs constraint across the 0/7 wrap, where the paired lift of the
//   target sits one unit of cs lower automatically).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "floer/rational.hpp"
#include "floer/snf.hpp"

namespace floer {

struct Generator {
    std::string id;  // unique within a complex
    int grading = 0; // mod 8, stored in {0,...,7}
    Rat cs_level;    // in [0,1)
};

struct FilteredComplex {
    std::vector<Generator> generators;
    Mat d; // differential, d[target][source], square over the generator list
    bool differential_incomplete = false;

    size_t size() const { return generators.size(); }
    // index of a generator id, or npos
    size_t index_of(const std::string& id) const;
    static constexpr size_t npos = static_cast<size_t>(-1);
};

struct CoChain {
    int degree = 0;                        // mod 8
    std::map<std::string, i64> coefficients; // id -> integer, zero entries allowed
};

// Free rank plus torsion coefficients (each > 1, divisibility-ordered).
struct AbelianGroup {
    i64 free_rank = 0;
    std::vector<i64> torsion;
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Validating constructor: checks id uniqueness, grading/cs ranges, the
// lift-pairing support rule, and d*d = 0 (unless differential_incomplete).
// Throws DegreeMismatch / InternalCheckFailure / UnsupportedInput.
FilteredComplex make_complex(std::vector<Generator> generators, Mat d,
                             bool differential_incomplete = false);

// Subcomplex of generators with canonical lift level strictly below r.
// r = infinity is the identity.  Throws ForbiddenLevel when frac(r) equals
// some generator's cs value (r must lie in Lambda_Y).  The restricted
// differential is re-checked: (d^r)^2 = 0 or the call fails loudly.
FilteredComplex restrict_complex(const FilteredComplex& c, const RatInf& r);

// HF^i_r of the restricted complex: ker(delta^i) / im(delta^{i-1}) via
// Smith normal form.  Throws DifferentialIncomplete.
AbelianGroup cohomology(const FilteredComplex& c, int i, const RatInf& r);

// Decides delta^r(n) = -t over the integers; returns the witness n (degree
// one below t) or nullopt.  Throws DifferentialIncomplete / DegreeMismatch
// (t supported outside restrict(c, r) or off its stated degree).
std::optional<CoChain> is_coboundary(const CoChain& t, const FilteredComplex& c,
                                     const RatInf& r);

// The excluded filtration levels in [0,1]: sorted distinct cs values of the
// generators, with 1 appended when 0 occurs (its other in-window lift).
// Any r strictly between consecutive entries (and unequal to all) is an
// admissible level.
std::vector<Rat> admissible_levels(const FilteredComplex& c);

} // namespace floer

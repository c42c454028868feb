// flat.hpp
// Irreducible SU(2) flat connections on Sigma(a1,a2,a3): enumeration by
// rotation numbers, exact Chern-Simons values, and Floer gradings mod 8.
//
// Classification used here (n = 3, all-odd b_i gauge of seifert.hpp):
// an irreducible flat connection is a conjugacy class of representations
// sending the singular-fiber generator x_i to a rotation of angle
// pi*l_i/a_i (0 < l_i < a_i) and the central fiber h to eps in {+1,-1},
// subject to
//   - parity: (-1)^{l_i} = eps for every i,
//   - product: the three rotations multiply to s*I, s = eps^{b0},
// and the product condition holds for some choice of axes iff the strict
// triangle test passes on (t1, t2, tau) in units of pi:
//   |t1 - t2| < tau < min(t1 + t2, 2 - t1 - t2),
// t_i = l_i/a_i and tau = l3/a3 (s = +1) or 1 - l3/a3 (s = -1).
// Each admissible (l, eps) is exactly one conjugacy class.
#pragma once

#include <cstdint>
#include <vector>

#include "floer/complex.hpp"
#include "floer/rational.hpp"
#include "floer/seifert.hpp"

namespace floer {

struct FlatConnection {
    std::vector<i64> rotation_numbers; // l_i with 0 < l_i < a_i
    int epsilon = -1;                  // central-fiber holonomy sign
    i64 e_label = 0;                   // least congruence label in (0, 2a)
    Rat cs_value;                      // -e^2/(4a) mod 1, in [0,1)
    int grading = 0;                   // Floer index mod 8
    bool irreducible = true;
};

// Complete list of irreducible classes, sorted by (cs_value, grading,
// rotation_numbers).  Throws UnsupportedInput for n > 3.
std::vector<FlatConnection> enumerate_flat_connections(const SeifertData& y);

// All congruence labels of the class with rotation numbers ls and central
// sign eps: e in (0, 2a) with (-1)^e = eps and, per slot,
//   (a/a_i) e = +-l_i (mod a_i)   when a_i is odd,
//   (a/a_i) e = +-l_i (mod 2a_i)  when a_i is even.
// All labels of one class share one cs value and one grading; this is
// asserted at enumeration time.  Throws NoCongruenceSolution when empty.
std::vector<i64> e_label_candidates(const SeifertData& y, const std::vector<i64>& ls,
                                    int eps);

// The mod-1 representative of -e^2/(4a) for the label of c, recomputed
// from the congruence system (throws NoCongruenceSolution if c's rotation
// data admits no label, which is unreachable for enumerated connections).
Rat cs_invariant(const SeifertData& y, const FlatConnection& c);

// cs of the trivial connection theta.
inline Rat cs_trivial() { return Rat(0); }

// Floer index mod 8 via the Fintushel-Stern R-invariant (grading.cpp);
// throws PrecisionFailure when the trigonometric sum is not within 1e-6
// of an integer at 50-digit precision.
int floer_grading(const SeifertData& y, const FlatConnection& c);

// The rounded R-invariant itself (before the mod-8 normalization).
i64 r_invariant(const SeifertData& y, i64 e);

// One generator per connection (id "e<label>", its grading and cs value).
// Differential: zero when all gradings share one parity; otherwise the
// complex is flagged differential_incomplete and the differential must be
// supplied through the explicit-complex input path.
FilteredComplex build_filtered_generators(const SeifertData& y);

} // namespace floer

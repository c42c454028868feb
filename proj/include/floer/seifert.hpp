// seifert.hpp
// SeifertData: validated pairwise-coprime multiplicities of the Brieskorn
// homology sphere Sigma(a1,...,an), plus the normalized Seifert invariants
// (b0, b_i) in the gauge used by every parity argument downstream:
//
//   b_i = (a/a_i)^{-1} mod a_i, minimal positive, forced odd
//         (add a_i if even; for an even a_i the inverse is already odd),
//   b0  = (1 - sum_i b_i (a/a_i)) / a,
//
// so that b0*a + sum_i b_i*(a/a_i) = 1 and the Euler number is
// e(Sigma) = -(b0 + sum b_i/a_i) = -1/a (Brieskorn orientation).
// With all b_i odd the central-fiber constraint (-1)^{l_i} = eps^{b_i}
// reads uniformly: eps = -1 forces all rotation numbers odd, eps = +1
// forces all even.
#pragma once

#include <cstdint>
#include <vector>

#include "floer/errors.hpp"

namespace floer {

struct SeifertData {
    std::vector<std::int64_t> multiplicities; // pairwise coprime, each >= 2
    std::int64_t a = 0;                       // product of the multiplicities

    // Normalized Seifert invariants in the all-odd gauge above.
    std::int64_t b0 = 0;
    std::vector<std::int64_t> b;

    int n() const { return static_cast<int>(multiplicities.size()); }
};

// Validates the multiplicity list and computes the normalized invariants.
// Throws TooFewFibers (length < 3), UnsupportedInput (entry < 2),
// NotCoprime(i,j), or OverflowError when the product leaves int64.
SeifertData validate_seifert(const std::vector<std::int64_t>& multiplicities);

} // namespace floer

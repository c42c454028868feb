// grading.cpp
// The Fintushel-Stern R-invariant behind the Floer grading:
//   R(e) = 2e^2/a - 3
//          + sum_i (2/a_i) sum_{k=1}^{a_i-1}
//               cot(pi a k / a_i^2) cot(pi k / a_i) sin^2(pi k e / a_i),
// evaluated at 50 decimal digits and rounded.  The pre-rounding value must
// land within 1e-6 of an integer or the computation refuses to answer
// (PrecisionFailure): the sum is a sharp transcription-error trap.
// Cotangent/sine arguments are reduced mod pi exactly in the integers
// before evaluation, so precision does not degrade with large a.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

#include "floer/errors.hpp"
#include "floer/flat.hpp"

namespace floer {

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

// cot(pi * p / q) with p/q reduced mod 1 exactly (p, q from i128 products).
big cot_pi(i128 p, i128 q) {
    p %= q;
    if (p < 0) p += q;
    if (p == 0) throw InternalCheckFailure("cot singularity in R-sum");
    big x = boost::math::constants::pi<big>() * i64(p) / i64(q);
    return cos(x) / sin(x);
}

// sin^2(pi * p / q), same exact reduction.
big sin2_pi(i128 p, i128 q) {
    p %= q;
    if (p < 0) p += q;
    big x = boost::math::constants::pi<big>() * i64(p) / i64(q);
    big s = sin(x);
    return s * s;
}

} // namespace

i64 r_invariant(const SeifertData& y, i64 e) {
    big total = big(2) * e * e / y.a - 3;
    for (i64 ai : y.multiplicities) {
        big inner = 0;
        for (i64 k = 1; k < ai; ++k)
            inner += cot_pi(i128(y.a) * k, i128(ai) * ai) * cot_pi(k, ai) *
                     sin2_pi(i128(e) * k, ai);
        total += big(2) / ai * inner;
    }
    big rounded = round(total);
    if (abs(total - rounded) > big("1e-6"))
        throw PrecisionFailure("R-sum not integer-close for e = " + std::to_string(e) +
                               " (off by " + (abs(total - rounded)).str(5) + ")");
    return static_cast<i64>(rounded);
}

} // namespace floer

// seifert.cpp
// Input validation and the normalized Seifert invariants (see seifert.hpp).

#include "floer/seifert.hpp"

#include <numeric>
#include <string>

#include "floer/rational.hpp"

namespace floer {

namespace {

// Modular inverse of x mod m for coprime x, m (extended Euclid).
i64 mod_inverse(i64 x, i64 m) {
    i64 r0 = x % m, r1 = m;
    i64 s0 = 1, s1 = 0;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 rt = r0 - q * r1; r0 = r1; r1 = rt;
        i64 st = s0 - q * s1; s0 = s1; s1 = st;
    }
    if (r0 != 1 && r0 != -1) throw InternalCheckFailure("mod_inverse: arguments not coprime");
    if (r0 == -1) s0 = -s0;
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

} // namespace

SeifertData validate_seifert(const std::vector<std::int64_t>& mults) {
    if (mults.size() < 3)
        throw TooFewFibers("need at least 3 multiplicities, got " +
                           std::to_string(mults.size()));
    for (size_t i = 0; i < mults.size(); ++i)
        if (mults[i] < 2)
            throw UnsupportedInput("multiplicity a[" + std::to_string(i) + "] = " +
                                   std::to_string(mults[i]) + " < 2");
    for (size_t i = 0; i < mults.size(); ++i)
        for (size_t j = i + 1; j < mults.size(); ++j)
            if (std::gcd(mults[i], mults[j]) > 1)
                throw NotCoprime(int(i), int(j),
                                 "gcd(a[" + std::to_string(i) + "], a[" + std::to_string(j) +
                                 "]) = " + std::to_string(std::gcd(mults[i], mults[j])));

    SeifertData y;
    y.multiplicities = mults;
    i128 prod = 1;
    for (i64 ai : mults) prod *= ai;
    y.a = checked_i64(prod, "product of multiplicities");

    // b_i = (a/a_i)^{-1} mod a_i, forced odd.
    i128 weighted = 0;
    for (i64 ai : mults) {
        i64 bi = mod_inverse((y.a / ai) % ai, ai);
        if (bi % 2 == 0) bi += ai; // a_i is odd here; even a_i inverses are already odd
        if (bi % 2 != 1) throw InternalCheckFailure("b_i parity normalization failed");
        y.b.push_back(bi);
        weighted += i128(bi) * (y.a / ai);
    }
    i128 num = 1 - weighted;
    if (num % y.a != 0) throw InternalCheckFailure("Seifert normalization: a does not divide 1 - sum");
    y.b0 = checked_i64(num / y.a, "b0");
    return y;
}

} // namespace floer

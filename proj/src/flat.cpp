// flat.cpp
// Enumeration of irreducible flat connections and their congruence labels
// (see flat.hpp for the classification conventions).

#include "floer/flat.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "floer/errors.hpp"

namespace floer {

namespace {

// Strict triangle test in units of pi: |t1 - t2| < tau < min(t1+t2, 2-t1-t2).
bool plain_admissible(const Rat& t1, const Rat& t2, const Rat& tau) {
    Rat lo = t1 < t2 ? t2 - t1 : t1 - t2;
    Rat hi = t1 + t2;
    Rat hi2 = Rat(2) - hi;
    if (hi2 < hi) hi = hi2;
    return lo < tau && tau < hi;
}

int product_sign(const SeifertData& y, int eps) {
    // s = eps^{b0}
    return (eps == -1 && (y.b0 % 2 != 0)) ? -1 : +1;
}

bool tuple_admissible(const SeifertData& y, const std::vector<i64>& ls, int eps) {
    Rat t1(ls[0], y.multiplicities[0]);
    Rat t2(ls[1], y.multiplicities[1]);
    Rat t3(ls[2], y.multiplicities[2]);
    Rat tau = product_sign(y, eps) == 1 ? t3 : Rat(1) - t3;
    return plain_admissible(t1, t2, tau);
}

Rat cs_of_label(const SeifertData& y, i64 e) {
    return (-Rat(checked_i64(i128(e) * e, "e^2"), checked_i64(i128(4) * y.a, "4a"))).mod1();
}

} // namespace

std::vector<i64> e_label_candidates(const SeifertData& y, const std::vector<i64>& ls,
                                    int eps) {
    int want_parity = (eps == -1) ? 1 : 0;
    std::vector<i64> cands;
    for (i64 e = 1; e < 2 * y.a; ++e) {
        if (e % 2 != want_parity) continue;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            i64 ai = y.multiplicities[i];
            i64 mod = (ai % 2 == 0) ? 2 * ai : ai;
            i64 t = i64(i128((y.a / ai) % mod) * (e % mod) % mod);
            i64 l = ls[i] % mod;
            if (t != l && t != (mod - l) % mod) ok = false;
        }
        if (ok) cands.push_back(e);
    }
    if (cands.empty())
        throw NoCongruenceSolution("no label e solves the congruences for the given rotation numbers");
    return cands;
}

std::vector<FlatConnection> enumerate_flat_connections(const SeifertData& y) {
    if (y.n() != 3)
        throw UnsupportedInput("n > 3 fibers not supported (n = " + std::to_string(y.n()) + ")");

    std::vector<FlatConnection> out;
    for (int eps : {+1, -1}) {
        int parity = (eps == -1) ? 1 : 0;
        std::vector<i64> ls(3);
        for (ls[0] = 1; ls[0] < y.multiplicities[0]; ++ls[0]) {
            if (ls[0] % 2 != parity) continue;
            for (ls[1] = 1; ls[1] < y.multiplicities[1]; ++ls[1]) {
                if (ls[1] % 2 != parity) continue;
                for (ls[2] = 1; ls[2] < y.multiplicities[2]; ++ls[2]) {
                    if (ls[2] % 2 != parity) continue;
                    if (!tuple_admissible(y, ls, eps)) continue;

                    FlatConnection c;
                    c.rotation_numbers = ls;
                    c.epsilon = eps;
                    auto cands = e_label_candidates(y, ls, eps);
                    c.e_label = cands.front();
                    c.cs_value = cs_of_label(y, c.e_label);
                    c.grading = int(((r_invariant(y, c.e_label) + 3) % 8 + 8) % 8);
                    // every label of the class must agree on cs (the grading
                    // agreement is covered by the orbit tests; recomputing the
                    // R sum per label here would dominate the enumeration)
                    for (i64 e : cands)
                        if (cs_of_label(y, e) != c.cs_value)
                            throw InternalCheckFailure(
                                "cs value differs within one label orbit (e = " +
                                std::to_string(e) + ")");
                    out.push_back(std::move(c));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FlatConnection& x, const FlatConnection& z) {
        if (x.cs_value != z.cs_value) return x.cs_value < z.cs_value;
        if (x.grading != z.grading) return x.grading < z.grading;
        return x.rotation_numbers < z.rotation_numbers;
    });
    return out;
}

Rat cs_invariant(const SeifertData& y, const FlatConnection& c) {
    auto cands = e_label_candidates(y, c.rotation_numbers, c.epsilon);
    if (std::find(cands.begin(), cands.end(), c.e_label) == cands.end())
        throw NoCongruenceSolution("stored e_label is not a label of the stored rotation numbers");
    return cs_of_label(y, c.e_label);
}

int floer_grading(const SeifertData& y, const FlatConnection& c) {
    // affine normalization: the e = 1 connection of Sigma(2,3,5) has grading 1
    return int(((r_invariant(y, c.e_label) + 3) % 8 + 8) % 8);
}

FilteredComplex build_filtered_generators(const SeifertData& y) {
    auto conns = enumerate_flat_connections(y);
    std::vector<Generator> gens;
    std::set<int> parities;
    for (const auto& c : conns) {
        gens.push_back({"e" + std::to_string(c.e_label), c.grading, c.cs_value});
        parities.insert(c.grading % 2);
    }
    bool incomplete = parities.size() > 1;
    return make_complex(std::move(gens), Mat{}, incomplete);
}

} // namespace floer

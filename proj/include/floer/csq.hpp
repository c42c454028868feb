// csq.hpp
// Chern-Simons pairings and the covering invariants Q-tilde and Q^l for
// homology S^3 x S^1 models.  Three model variants:
//   ProductYxS1   — X = Y x S^1 for a Seifert Y; every cyclic cover is
//                   again Y x S^1, so all covers share the Y cs-spectrum.
//   HomotopyS3xS1 — no irreducible flat connections on any cover;
//                   Q-tilde and every Q^l are infinite.
//   ExplicitCovers — declared per-cover lists of cs values in [0,1); the
//                   tool is a calculator over the declared data.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "floer/flat.hpp"
#include "floer/rational.hpp"
#include "floer/seifert.hpp"

namespace floer {

struct FourManifoldModel {
    enum class Kind { ProductYxS1, HomotopyS3xS1, ExplicitCovers };
    Kind kind = Kind::HomotopyS3xS1;
    std::optional<SeifertData> product_y;       // ProductYxS1
    std::map<i64, std::vector<Rat>> covers;     // ExplicitCovers: i -> cs values

    static FourManifoldModel product(SeifertData y);
    static FourManifoldModel homotopy_s3xs1();
    static FourManifoldModel explicit_covers(std::map<i64, std::vector<Rat>> covers);
};

// Minimal distance to the integers, in [0, 1/2], or infinity.
struct QValue {
    RatInf value;
};

// cs pairing cs_(X,phi)([a],[b]) on a product model: the difference of the
// [0,1) representatives cs_Y(a) - cs_Y(b).  b = nullptr means the trivial
// connection theta (cs 0).  Throws UnsupportedModel off the product
// variant (their flat data comes through ExplicitCovers instead).
Rat cs_pair(const FourManifoldModel& x, const FlatConnection& a, const FlatConnection* b);

// min over the listed values v of min(v, 1-v); infinity on an empty list.
// Throws UnsupportedInput when a value is outside [0,1).
QValue q_tilde(const std::vector<Rat>& cs_values);

// Q^l_X = min over covers i = 1..l of Q-tilde of cover i.
//   HomotopyS3xS1 -> infinity; ProductYxS1 -> Q-tilde of the Y spectrum
//   (independent of l); ExplicitCovers -> min over declared lists, and a
//   gap in 1..l raises MissingCover(i).
QValue q_l(const FourManifoldModel& x, i64 l);

} // namespace floer

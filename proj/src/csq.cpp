// csq.cpp
// Q invariants and cs pairings over the supported 4-manifold models.

#include "floer/csq.hpp"

#include <string>

#include "floer/errors.hpp"

namespace floer {

FourManifoldModel FourManifoldModel::product(SeifertData y) {
    FourManifoldModel x;
    x.kind = Kind::ProductYxS1;
    x.product_y = std::move(y);
    return x;
}

FourManifoldModel FourManifoldModel::homotopy_s3xs1() {
    FourManifoldModel x;
    x.kind = Kind::HomotopyS3xS1;
    return x;
}

FourManifoldModel FourManifoldModel::explicit_covers(std::map<i64, std::vector<Rat>> covers) {
    FourManifoldModel x;
    x.kind = Kind::ExplicitCovers;
    x.covers = std::move(covers);
    return x;
}

Rat cs_pair(const FourManifoldModel& x, const FlatConnection& a, const FlatConnection* b) {
    if (x.kind != FourManifoldModel::Kind::ProductYxS1)
        throw UnsupportedModel("cs_pair is defined on the ProductYxS1 model only");
    Rat cs_b = b ? b->cs_value : cs_trivial();
    return a.cs_value - cs_b;
}

QValue q_tilde(const std::vector<Rat>& cs_values) {
    if (cs_values.empty()) return {RatInf::infinity()};
    bool first = true;
    Rat best;
    for (const Rat& v : cs_values) {
        if (v < Rat(0) || !(v < Rat(1)))
            throw UnsupportedInput("cs value " + v.str() + " outside [0,1)");
        Rat d = v.dist_to_int();
        if (first || d < best) { best = d; first = false; }
    }
    return {RatInf(best)};
}

QValue q_l(const FourManifoldModel& x, i64 l) {
    if (l < 1) throw UnsupportedInput("cover count l must be positive");
    switch (x.kind) {
    case FourManifoldModel::Kind::HomotopyS3xS1:
        return {RatInf::infinity()};
    case FourManifoldModel::Kind::ProductYxS1: {
        // every i-fold cyclic cover of Y x S^1 is Y x S^1 again, so the
        // minimum over i = 1..l is the base Q-tilde
        std::vector<Rat> spectrum;
        for (const auto& c : enumerate_flat_connections(*x.product_y))
            spectrum.push_back(c.cs_value);
        return q_tilde(spectrum);
    }
    case FourManifoldModel::Kind::ExplicitCovers: {
        RatInf best = RatInf::infinity();
        for (i64 i = 1; i <= l; ++i) {
            auto it = x.covers.find(i);
            if (it == x.covers.end())
                throw MissingCover(i, "cover " + std::to_string(i) + " of 1.." +
                                          std::to_string(l) + " not declared");
            best = RatInf::min(best, q_tilde(it->second).value);
        }
        return {best};
    }
    }
    throw InternalCheckFailure("unreachable model kind");
}

} // namespace floer

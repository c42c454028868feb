// obstruction.cpp
// Window computation, per-level certificates, and the verdict sweep.

#include "floer/obstruction.hpp"

#include <algorithm>
#include <set>

#include "floer/errors.hpp"
#include "floer/flat.hpp"

namespace floer {

i64 count_l_y(const SeifertData& y) {
    return i64(enumerate_flat_connections(y).size()) + 1;
}

namespace {

Window window_for_complex(const FilteredComplex& c, i64 l_y, const FourManifoldModel& x) {
    Window w;
    w.q_value = q_l(x, 2 * l_y + 3).value;
    w.r_max = RatInf::min(w.q_value, RatInf(Rat(1)));
    w.excluded = admissible_levels(c);
    // [0, r_max] contains infinitely many rationals unless it is the single
    // point 0, so the window survives the finite exclusion set except in
    // that degenerate case.
    const Rat& rm = w.r_max.finite();
    bool zero_excluded =
        std::find(w.excluded.begin(), w.excluded.end(), Rat(0)) != w.excluded.end();
    w.nonempty = rm > Rat(0) || !zero_excluded;
    return w;
}

std::vector<std::string> even_degree_ids(const FilteredComplex& c) {
    std::vector<std::string> out;
    for (const auto& g : c.generators)
        if (g.grading % 2 == 0) out.push_back(g.id);
    return out;
}

} // namespace

Window admissible_window(const SeifertData& y, const FourManifoldModel& x) {
    FilteredComplex c = build_filtered_generators(y);
    return window_for_complex(c, count_l_y(y), x);
}

CertifyOutcome certify_theta_nonvanishing(const FilteredComplex& c, const RatInf& r,
                                          const AssumptionSet& assumptions) {
    if (!assumptions.theta_counts && !assumptions.theta_nonvanishing_assumed)
        throw InsufficientAssumptions("no theta data: neither explicit counts nor an "
                                      "assumed-nonvanishing axiom");

    FilteredComplex restricted = restrict_complex(c, r); // throws ForbiddenLevel

    CertifyOutcome out;
    Certificate& cert = out.cert;
    cert.r = r;
    cert.even_below_r = even_degree_ids(restricted);

    if (assumptions.theta_counts) {
        const CoChain& counts = *assumptions.theta_counts;
        if (((counts.degree % 8) + 8) % 8 != 1)
            throw DegreeMismatch("theta counts must be a degree-1 cochain");
        for (const auto& [id, coeff] : counts.coefficients) {
            size_t idx = c.index_of(id);
            if (idx == FilteredComplex::npos)
                throw DegreeMismatch("theta counts reference unknown generator " + id);
            if (coeff != 0 && c.generators[idx].grading != 1)
                throw DegreeMismatch("theta counts carry a nonzero coefficient on " + id +
                                     " which is not a degree-1 generator");
        }
        cert.theta_coefficients = counts.coefficients;
        for (const auto& g : restricted.generators) {
            auto it = counts.coefficients.find(g.id);
            if (it != counts.coefficients.end() && it->second != 0)
                cert.theta_support_below_r.push_back(g.id);
        }
        if (cert.theta_support_below_r.empty()) {
            out.reason = "theta-restriction-zero";
            return out;
        }
        if (cert.even_below_r.empty()) {
            cert.theta_mode = "explicit-counts";
            cert.complete = out.ok = true;
            return out;
        }
        // even-degree generators survive: decide exactly
        if (restricted.differential_incomplete) {
            out.reason = "differential-incomplete";
            return out;
        }
        CoChain theta_r;
        theta_r.degree = 1;
        for (const auto& g : restricted.generators) {
            auto it = counts.coefficients.find(g.id);
            if (it != counts.coefficients.end() && it->second != 0)
                theta_r.coefficients[g.id] = it->second;
        }
        if (is_coboundary(theta_r, restricted, RatInf::infinity())) {
            out.reason = "theta-cobounds-at-this-level";
            return out;
        }
        cert.theta_mode = "coboundary-check";
        cert.has_algebra = true;
        cert.restricted_generators = restricted.generators;
        for (size_t b = 0; b < restricted.size(); ++b)
            for (size_t a = 0; a < restricted.size(); ++a)
                if (restricted.d[b][a] != 0)
                    cert.restricted_differential.emplace_back(restricted.generators[b].id,
                                                              restricted.generators[a].id,
                                                              restricted.d[b][a]);
        cert.complete = out.ok = true;
        return out;
    }

    // assumed-nonvanishing path: parity certificate only
    if (!cert.even_below_r.empty()) {
        out.reason = "even-degree-generator-below-r";
        return out;
    }
    cert.degree1_all.clear();
    for (const auto& g : c.generators)
        if (g.grading == 1) cert.degree1_all.push_back(g.id);
    for (const auto& g : restricted.generators)
        if (g.grading == 1) cert.degree1_below_r.push_back(g.id);
    if (cert.degree1_all.empty()) {
        out.reason = "no-degree1-generators";
        return out;
    }
    if (cert.degree1_below_r.size() != cert.degree1_all.size()) {
        out.reason = "degree1-generator-excluded";
        return out;
    }
    cert.theta_mode = "assumed-nonvanishing";
    cert.axiom_tag = assumptions.assumption_source.empty() ? "theta-nonvanishing"
                                                           : assumptions.assumption_source;
    cert.complete = out.ok = true;
    return out;
}

namespace {

std::vector<Rat> candidate_levels(const Window& w) {
    std::vector<Rat> cands;
    const Rat one(1);
    const Rat& rm = w.r_max.finite();
    auto excluded_has = [&](const Rat& v) {
        return std::find(w.excluded.begin(), w.excluded.end(), v) != w.excluded.end();
    };
    // r = 1 first when the window reaches it and 1 is not a cs lift
    if (rm == one && !excluded_has(one)) cands.push_back(one);
    // midpoints between consecutive excluded levels clipped to [0, r_max]
    std::vector<Rat> grid{Rat(0)};
    for (const Rat& x : w.excluded)
        if (Rat(0) < x && x < rm) grid.push_back(x);
    grid.push_back(rm);
    std::sort(grid.begin(), grid.end());
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(grid[i] < grid[i + 1])) continue;
        Rat mid = (grid[i] + grid[i + 1]) / Rat(2);
        if (excluded_has(mid)) continue;
        if (std::find(cands.begin(), cands.end(), mid) == cands.end()) cands.push_back(mid);
    }
    return cands;
}

ObstructionReport verdict_impl(const FilteredComplex& c, const std::vector<i64>& mults,
                               const FourManifoldModel& x, const AssumptionSet& assumptions,
                               const std::optional<Rat>& only_r) {
    ObstructionReport rep;
    rep.y_multiplicities = mults;
    rep.generators = c.generators;
    rep.differential_incomplete = c.differential_incomplete;
    rep.l_y = i64(c.size()) + 1;
    Window w = window_for_complex(c, rep.l_y, x);
    rep.q_value = w.q_value;
    rep.r_max = w.r_max;
    rep.excluded = w.excluded;
    rep.window_nonempty = w.nonempty;
    if (assumptions.nondegeneracy_asserted) rep.axioms_used.push_back("nondegeneracy");
    if (assumptions.theta_nonvanishing_assumed)
        rep.axioms_used.push_back(assumptions.assumption_source.empty()
                                      ? "theta-nonvanishing"
                                      : assumptions.assumption_source);

    rep.verdict = "Inconclusive";
    if (!assumptions.nondegeneracy_asserted) {
        rep.reasons.push_back("nondegeneracy-not-asserted");
        return rep;
    }
    if (!assumptions.theta_counts && !assumptions.theta_nonvanishing_assumed) {
        rep.reasons.push_back("insufficient-assumptions");
        return rep;
    }

    std::vector<Rat> candidates =
        only_r ? std::vector<Rat>{*only_r} : candidate_levels(w);
    std::set<std::string> seen_reasons;
    for (const Rat& r : candidates) {
        TestedLevel t;
        t.r = r;
        if (!(Rat(0) < r) || RatInf(r) > w.r_max) {
            t.reasons.push_back("level-outside-window");
            seen_reasons.insert("level-outside-window");
            rep.tested.push_back(std::move(t));
            continue;
        }
        try {
            CertifyOutcome res = certify_theta_nonvanishing(c, RatInf(r), assumptions);
            if (res.ok) {
                t.certified = true;
                t.cert = res.cert;
                rep.tested.push_back(std::move(t));
                rep.verdict = "Obstructed";
                return rep;
            }
            t.cert = res.cert;
            t.reasons.push_back(res.reason);
            seen_reasons.insert(res.reason);
        } catch (const ForbiddenLevel& e) {
            t.reasons.push_back(std::string("forbidden-level: ") + e.what());
            seen_reasons.insert("forbidden-level");
        }
        rep.tested.push_back(std::move(t));
    }
    rep.reasons.push_back(rep.tested.empty() ? "window-empty" : "window-candidates-exhausted");
    rep.reasons.insert(rep.reasons.end(), seen_reasons.begin(), seen_reasons.end());
    return rep;
}

} // namespace

ObstructionReport embedding_verdict(const SeifertData& y, const FourManifoldModel& x,
                                    const AssumptionSet& assumptions,
                                    const std::optional<Rat>& only_r) {
    AssumptionSet a = assumptions;
    // flat connections on a Seifert-fibered homology sphere are all
    // nondegenerate, so this input path satisfies the assumption by itself
    a.nondegeneracy_asserted = true;
    return verdict_impl(build_filtered_generators(y), y.multiplicities, x, a, only_r);
}

ObstructionReport embedding_verdict_complex(const FilteredComplex& c,
                                            const std::vector<i64>& y_multiplicities,
                                            const FourManifoldModel& x,
                                            const AssumptionSet& assumptions,
                                            const std::optional<Rat>& only_r) {
    return verdict_impl(c, y_multiplicities, x, assumptions, only_r);
}

} // namespace floer

// obstruction.hpp
// The embedding-obstruction criterion: over the window
// [0, min{Q^{2l_Y+3}_X, 1}] of admissible filtration levels r, certify
// that the obstruction class [theta^r] in HF^1_r(Y) is nonzero.  A
// successful certificate at any admissible r yields the verdict
// Obstructed (no degree-one embedding of Y into X); otherwise the verdict
// is Inconclusive with per-level failure reasons.
//
// A certificate records two independently re-checkable facts:
//   (i)  the restricted complex has no even-degree generators (so the
//        coboundary image into degree 1 is trivial), and
//   (ii) theta restricted below r is nonzero — read off explicit counts,
//        or implied by an assumed-nonvanishing axiom when every degree-1
//        generator survives the restriction.
// When even-degree generators do survive and explicit counts are given,
// the engine falls back to the exact Smith-normal-form coboundary
// decision and embeds the restricted algebra in the certificate, keeping
// the report self-contained for the independent checker.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "floer/complex.hpp"
#include "floer/csq.hpp"
#include "floer/rational.hpp"
#include "floer/seifert.hpp"

namespace floer {

struct AssumptionSet {
    bool nondegeneracy_asserted = false;     // Assumption: all flat connections nondegenerate
    bool theta_nonvanishing_assumed = false; // axiom: 0 != [theta] in HF^1
    std::string assumption_source;           // tag for the axiom, e.g. "Froyshov h-invariant"
    std::optional<CoChain> theta_counts;     // explicit degree-1 counts, when known
};

struct Certificate {
    RatInf r; // finite in the sweep; infinity only in diagnostic calls
    std::vector<std::string> even_below_r;   // even-degree generator ids below r
    std::string theta_mode; // "explicit-counts" | "assumed-nonvanishing" | "coboundary-check"
    std::vector<std::string> degree1_all;
    std::vector<std::string> degree1_below_r;
    std::vector<std::string> theta_support_below_r;
    std::map<std::string, i64> theta_coefficients;
    std::string axiom_tag;
    // coboundary-check payload: the restricted algebra, serialized into the
    // report so the checker can re-run the solve without moduli data
    bool has_algebra = false;
    std::vector<Generator> restricted_generators;
    std::vector<std::tuple<std::string, std::string, i64>> restricted_differential;
    bool complete = false;
};

struct CertifyOutcome {
    bool ok = false;
    Certificate cert;
    std::string reason; // failure reason code when !ok
};

struct TestedLevel {
    Rat r;
    bool certified = false;
    Certificate cert;                  // present when certified
    std::vector<std::string> reasons;  // failure reasons otherwise
};

struct ObstructionReport {
    std::vector<i64> y_multiplicities; // empty for explicit-complex input
    std::vector<Generator> generators; // full generator table of the Y complex
    bool differential_incomplete = false;
    i64 l_y = 0;
    RatInf q_value;  // Q^{2 l_Y + 3}_X
    RatInf r_max;    // min(q_value, 1); always finite
    std::vector<Rat> excluded;
    bool window_nonempty = false;
    std::vector<TestedLevel> tested;
    std::string verdict; // "Obstructed" | "Inconclusive"
    std::vector<std::string> reasons;
    std::vector<std::string> axioms_used;
};

// |R(Y)| = number of irreducible flat connections + 1 for theta.
i64 count_l_y(const SeifertData& y);

struct Window {
    RatInf q_value;
    RatInf r_max;
    std::vector<Rat> excluded;
    bool nonempty = false; // [0, r_max] minus exclusions is nonempty
};

Window admissible_window(const SeifertData& y, const FourManifoldModel& x);

// Certifies [theta^r] != 0 at one level.  Throws ForbiddenLevel when r
// hits a cs lift and InsufficientAssumptions when no theta data is given.
CertifyOutcome certify_theta_nonvanishing(const FilteredComplex& c, const RatInf& r,
                                          const AssumptionSet& assumptions);

// Full criterion for a Seifert Y.  only_r pins the sweep to one level
// (the CLI --r path); levels outside (0, r_max] are reported as such
// without certification.
ObstructionReport embedding_verdict(const SeifertData& y, const FourManifoldModel& x,
                                    const AssumptionSet& assumptions,
                                    const std::optional<Rat>& only_r = std::nullopt);

// Same engine over an explicitly given complex (the jobspec path).
ObstructionReport embedding_verdict_complex(const FilteredComplex& c,
                                            const std::vector<i64>& y_multiplicities,
                                            const FourManifoldModel& x,
                                            const AssumptionSet& assumptions,
                                            const std::optional<Rat>& only_r = std::nullopt);

} // namespace floer

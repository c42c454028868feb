// jobspec.hpp
// The JSON job description consumed by `--input`: one Y source (Seifert
// multiplicities or an explicit filtered complex), one X model, an
// assumptions block, and the requested command.  Exact fractions travel
// as "p/q" strings.  The schema is documented in docs/jobspec.md with
// worked examples under jobs/.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../../vendor/json.hpp"
#include "floer/complex.hpp"
#include "floer/csq.hpp"
#include "floer/obstruction.hpp"
#include "floer/seifert.hpp"

namespace floer {

struct JobSpec {
    std::string command; // flat | cs | grading | homology | obstruct | sweep-example
    std::optional<SeifertData> y_seifert;
    std::optional<FilteredComplex> y_complex;
    std::vector<i64> y_multiplicities; // as given, empty for complex input
    FourManifoldModel x = FourManifoldModel::homotopy_s3xs1();
    AssumptionSet assumptions;
};

// Strict parser: unknown keys, missing command, zero or two Y sources,
// or malformed fractions all raise ParseError (or the validation error of
// the embedded object).
JobSpec parse_jobspec(const nlohmann::json& j);

// The explicit-complex branch of "y", also reused by tests.
FilteredComplex complex_from_json(const nlohmann::json& j);

} // namespace floer

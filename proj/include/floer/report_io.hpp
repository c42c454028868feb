// report_io.hpp
// JSON serialization of obstruction reports, and an independent checker
// that re-derives every certified claim from the report alone.  The
// checker never recomputes moduli: the generator table and, for
// coboundary-mode certificates, the restricted algebra are embedded in the
// report, so soundness of an "Obstructed" verdict reduces to finite
// arithmetic over the serialized data.
#pragma once

#include <string>
#include <vector>

#include "../../vendor/json.hpp"
#include "floer/obstruction.hpp"

namespace floer {

nlohmann::json rat_to_json(const Rat& v);
nlohmann::json ratinf_to_json(const RatInf& v);
Rat rat_from_json(const nlohmann::json& j);
RatInf ratinf_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ObstructionReport& rep);

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> failures;
};

// Re-checks a serialized report: generator table sanity, the excluded
// set, r_max = min(q, 1), and for an Obstructed verdict the full
// certificate (parity facts recomputed from the table; the coboundary
// decision re-run via Smith normal form on the embedded algebra).
VerifyResult verify_report(const nlohmann::json& report);

} // namespace floer

// jobspec.cpp

#include "floer/jobspec.hpp"

#include <map>
#include <set>

#include "floer/errors.hpp"
#include "floer/report_io.hpp"

namespace floer {

using nlohmann::json;

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed, const char* where) {
    if (!j.is_object()) throw ParseError(std::string(where) + " must be a JSON object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (!allowed.count(k))
            throw ParseError(std::string("unknown key \"") + k + "\" in " + where);
    }
}

std::vector<i64> int_list(const json& j, const char* where) {
    if (!j.is_array()) throw ParseError(std::string(where) + " must be an array of integers");
    std::vector<i64> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError(std::string(where) + " must contain integers only");
        out.push_back(v.get<i64>());
    }
    return out;
}

FourManifoldModel model_from_json(const json& j) {
    require_keys(j, {"model", "seifert", "covers"}, "x");
    std::string model = j.at("model").get<std::string>();
    if (model == "homotopy-s3xs1") {
        if (j.contains("seifert") || j.contains("covers"))
            throw ParseError("homotopy-s3xs1 takes no further data");
        return FourManifoldModel::homotopy_s3xs1();
    }
    if (model == "product") {
        if (!j.contains("seifert"))
            throw ParseError("product model needs x.seifert multiplicities");
        return FourManifoldModel::product(validate_seifert(int_list(j.at("seifert"),
                                                                    "x.seifert")));
    }
    if (model == "explicit-covers") {
        if (!j.contains("covers"))
            throw ParseError("explicit-covers model needs x.covers");
        const json& cj = j.at("covers");
        if (!cj.is_object()) throw ParseError("x.covers must map cover index to cs lists");
        std::map<i64, std::vector<Rat>> covers;
        for (const auto& [k, arr] : cj.items()) {
            i64 idx;
            try {
                size_t used = 0;
                idx = std::stoll(k, &used);
                if (used != k.size()) throw std::invalid_argument(k);
            } catch (const std::exception&) {
                throw ParseError("cover index \"" + k + "\" is not an integer");
            }
            if (idx < 1) throw ParseError("cover indices start at 1");
            if (!arr.is_array()) throw ParseError("cover " + k + " must list cs values");
            std::vector<Rat> vals;
            for (const auto& v : arr) vals.push_back(rat_from_json(v));
            covers[idx] = std::move(vals);
        }
        return FourManifoldModel::explicit_covers(std::move(covers));
    }
    throw ParseError("unknown x.model \"" + model + "\"");
}

AssumptionSet assumptions_from_json(const json& j) {
    require_keys(j, {"froyshov_nonvanishing", "source", "nondegeneracy", "theta_counts"},
                 "assumptions");
    AssumptionSet a;
    if (j.contains("nondegeneracy")) a.nondegeneracy_asserted = j.at("nondegeneracy").get<bool>();
    if (j.contains("froyshov_nonvanishing"))
        a.theta_nonvanishing_assumed = j.at("froyshov_nonvanishing").get<bool>();
    if (j.contains("source")) a.assumption_source = j.at("source").get<std::string>();
    if (a.theta_nonvanishing_assumed && a.assumption_source.empty())
        a.assumption_source = "Froyshov h-invariant";
    if (j.contains("theta_counts")) {
        const json& tc = j.at("theta_counts");
        if (!tc.is_object()) throw ParseError("theta_counts must map generator id to integer");
        CoChain counts;
        counts.degree = 1;
        for (const auto& [id, v] : tc.items()) {
            if (!v.is_number_integer())
                throw ParseError("theta_counts[" + id + "] must be an integer");
            counts.coefficients[id] = v.get<i64>();
        }
        a.theta_counts = std::move(counts);
    }
    return a;
}

} // namespace

FilteredComplex complex_from_json(const json& j) {
    require_keys(j, {"generators", "differential", "incomplete"}, "y.complex");
    if (!j.contains("generators")) throw ParseError("y.complex needs a generators array");
    std::vector<Generator> gens;
    for (const auto& gj : j.at("generators")) {
        require_keys(gj, {"id", "grading", "cs"}, "generator");
        Generator g;
        g.id = gj.at("id").get<std::string>();
        g.grading = gj.at("grading").get<int>();
        g.cs_level = rat_from_json(gj.at("cs"));
        gens.push_back(std::move(g));
    }
    Mat d(gens.size(), std::vector<i64>(gens.size(), 0));
    std::map<std::string, size_t> idx;
    for (size_t i = 0; i < gens.size(); ++i) idx[gens[i].id] = i;
    if (j.contains("differential")) {
        for (const auto& ej : j.at("differential")) {
            require_keys(ej, {"from", "to", "coeff"}, "differential entry");
            std::string from = ej.at("from").get<std::string>();
            std::string to = ej.at("to").get<std::string>();
            auto fi = idx.find(from);
            auto ti = idx.find(to);
            if (fi == idx.end()) throw ParseError("differential source \"" + from + "\" unknown");
            if (ti == idx.end()) throw ParseError("differential target \"" + to + "\" unknown");
            d[ti->second][fi->second] = ej.at("coeff").get<i64>();
        }
    }
    bool incomplete = j.contains("incomplete") && j.at("incomplete").get<bool>();
    return make_complex(std::move(gens), std::move(d), incomplete);
}

JobSpec parse_jobspec(const json& j) {
    require_keys(j, {"command", "y", "x", "assumptions"}, "jobspec");
    if (!j.contains("command")) throw ParseError("jobspec needs a command");
    JobSpec spec;
    spec.command = j.at("command").get<std::string>();
    static const std::set<std::string> commands{"flat", "cs", "grading", "homology",
                                                "obstruct"};
    if (!commands.count(spec.command))
        throw ParseError("unknown command \"" + spec.command + "\""
                         " (sweep-example is range-driven and takes no jobspec)");

    if (j.contains("y")) {
        const json& y = j.at("y");
        require_keys(y, {"seifert", "complex"}, "y");
        if (y.contains("seifert") == y.contains("complex"))
            throw ParseError("y needs exactly one of seifert or complex");
        if (y.contains("seifert")) {
            spec.y_multiplicities = int_list(y.at("seifert"), "y.seifert");
            spec.y_seifert = validate_seifert(spec.y_multiplicities);
        } else {
            spec.y_complex = complex_from_json(y.at("complex"));
        }
    }
    if (j.contains("x")) spec.x = model_from_json(j.at("x"));
    if (j.contains("assumptions")) spec.assumptions = assumptions_from_json(j.at("assumptions"));
    return spec;
}

} // namespace floer

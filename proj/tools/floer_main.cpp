// floer_main.cpp
// Command-line front end.  Subcommands: flat, cs, grading, homology,
// obstruct, sweep-example.  Exit codes: 0 success / Obstructed,
// 1 Inconclusive, 2 input error.  All output is a pure function of the
// arguments; --json switches to the machine-readable rendering with the
// same numeric content.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "floer/errors.hpp"
#include "floer/flat.hpp"
#include "floer/jobspec.hpp"
#include "floer/obstruction.hpp"
#include "floer/report_io.hpp"

namespace {

using namespace floer;
using nlohmann::json;

constexpr int kExitSuccess = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInputError = 2;

std::string sigma_name(const std::vector<i64>& mults) {
    std::string s = "Sigma(";
    for (size_t i = 0; i < mults.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mults[i]);
    }
    return s + ")";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct LoadedJob {
    JobSpec spec;
    bool from_file = false;
};

// Resolves the Y input: either positional multiplicities or a jobspec
// file whose command field must match the subcommand.
LoadedJob load_job(const std::string& command, const std::vector<i64>& mults,
                   const std::string& input_path, bool need_y) {
    LoadedJob job;
    if (!input_path.empty()) {
        if (!mults.empty())
            throw ParseError("give multiplicities or --input, not both");
        std::ifstream in(input_path);
        if (!in) throw ParseError("cannot open " + input_path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSON in ") + input_path + ": " + e.what());
        }
        job.spec = parse_jobspec(j);
        job.from_file = true;
        if (job.spec.command != command)
            throw ParseError("jobspec command \"" + job.spec.command +
                             "\" does not match subcommand \"" + command + "\"");
    } else {
        job.spec.command = command;
        if (!mults.empty()) {
            job.spec.y_multiplicities = mults;
            job.spec.y_seifert = validate_seifert(mults);
        }
    }
    if (need_y && !job.spec.y_seifert && !job.spec.y_complex)
        throw ParseError(command + " needs Seifert multiplicities or --input");
    return job;
}

const SeifertData& require_seifert(const LoadedJob& job) {
    if (!job.spec.y_seifert)
        throw UnsupportedInput(job.spec.command + " requires a Seifert Y, not an explicit complex");
    return *job.spec.y_seifert;
}

int cmd_flat(const LoadedJob& job, bool json_out) {
    const SeifertData& y = require_seifert(job);
    auto conns = enumerate_flat_connections(y);
    if (json_out) {
        json rows = json::array();
        for (const auto& c : conns)
            rows.push_back(json{{"cs", rat_to_json(c.cs_value)},
                                {"e", c.e_label},
                                {"epsilon", c.epsilon},
                                {"grading", c.grading},
                                {"rotation_numbers", c.rotation_numbers}});
        emit(json{{"a", y.a},
                  {"connections", rows},
                  {"count", conns.size()},
                  {"multiplicities", y.multiplicities}});
        return kExitSuccess;
    }
    std::cout << sigma_name(y.multiplicities) << ": " << conns.size()
              << " irreducible flat connections (a = " << y.a << ")\n";
    for (const auto& c : conns) {
        std::cout << "  l = (";
        for (size_t i = 0; i < c.rotation_numbers.size(); ++i)
            std::cout << (i ? "," : "") << c.rotation_numbers[i];
        std::cout << ")  eps = " << (c.epsilon > 0 ? "+1" : "-1") << "  e = " << c.e_label
                  << "  cs = " << c.cs_value.str() << "  grading = " << c.grading << "\n";
    }
    return kExitSuccess;
}

int cmd_cs(const LoadedJob& job, bool json_out) {
    const SeifertData& y = require_seifert(job);
    auto conns = enumerate_flat_connections(y);
    if (json_out) {
        json rows = json::array();
        for (const auto& c : conns)
            rows.push_back(json{{"cs", rat_to_json(c.cs_value)}, {"e", c.e_label}});
        emit(json{{"multiplicities", y.multiplicities}, {"values", rows}});
        return kExitSuccess;
    }
    std::cout << sigma_name(y.multiplicities) << ": Chern-Simons values\n";
    for (const auto& c : conns)
        std::cout << "  cs(e = " << c.e_label << ") = " << c.cs_value.str() << "\n";
    return kExitSuccess;
}

int cmd_grading(const LoadedJob& job, bool json_out) {
    const SeifertData& y = require_seifert(job);
    auto conns = enumerate_flat_connections(y);
    if (json_out) {
        json rows = json::array();
        for (const auto& c : conns)
            rows.push_back(json{{"e", c.e_label},
                                {"grading", c.grading},
                                {"r_invariant", r_invariant(y, c.e_label)}});
        emit(json{{"gradings", rows}, {"multiplicities", y.multiplicities}});
        return kExitSuccess;
    }
    std::cout << sigma_name(y.multiplicities) << ": Floer gradings\n";
    for (const auto& c : conns)
        std::cout << "  e = " << c.e_label << "  R = " << r_invariant(y, c.e_label)
                  << "  grading = " << c.grading << "\n";
    return kExitSuccess;
}

std::string group_str(const AbelianGroup& g) {
    if (g.trivial()) return "0";
    std::string s;
    if (g.free_rank > 0) s = "Z^" + std::to_string(g.free_rank);
    for (i64 t : g.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    return s;
}

int cmd_homology(const LoadedJob& job, int degree, bool degree_given, const RatInf& r,
                 bool json_out) {
    FilteredComplex c = job.spec.y_complex ? *job.spec.y_complex
                                           : build_filtered_generators(require_seifert(job));
    std::string label = job.spec.y_complex ? std::string("explicit complex")
                                           : sigma_name(job.spec.y_multiplicities);
    std::vector<int> degrees;
    if (degree_given) {
        if (degree < 0 || degree > 7) throw UnsupportedInput("degree must lie in 0..7");
        degrees.push_back(degree);
    } else {
        for (int i = 0; i < 8; ++i) degrees.push_back(i);
    }
    if (json_out) {
        json rows = json::array();
        for (int i : degrees) {
            AbelianGroup g = cohomology(c, i, r);
            rows.push_back(
                json{{"degree", i}, {"free_rank", g.free_rank}, {"torsion", g.torsion}});
        }
        emit(json{{"groups", rows}, {"r", ratinf_to_json(r)}, {"source", label}});
        return kExitSuccess;
    }
    std::cout << label << ": HF^i_r, r = " << r.str() << "\n";
    for (int i : degrees)
        std::cout << "  i = " << i << ": " << group_str(cohomology(c, i, r)) << "\n";
    return kExitSuccess;
}

void print_report(const ObstructionReport& rep) {
    std::string label = rep.y_multiplicities.empty() ? std::string("explicit complex")
                                                     : sigma_name(rep.y_multiplicities);
    std::cout << label << ": l_Y = " << rep.l_y << ", Q^(2 l_Y + 3) = " << rep.q_value.str()
              << ", r_max = " << rep.r_max.str() << "\n";
    std::cout << "  excluded levels:";
    for (const Rat& v : rep.excluded) std::cout << " " << v.str();
    std::cout << "\n";
    for (const auto& t : rep.tested) {
        std::cout << "  r = " << t.r.str() << ": ";
        if (t.certified) {
            std::cout << "certified (" << t.cert.theta_mode;
            if (!t.cert.axiom_tag.empty()) std::cout << "; axiom: " << t.cert.axiom_tag;
            std::cout << ")\n";
        } else {
            std::cout << "failed (";
            for (size_t i = 0; i < t.reasons.size(); ++i)
                std::cout << (i ? ", " : "") << t.reasons[i];
            std::cout << ")\n";
        }
    }
    if (!rep.axioms_used.empty()) {
        std::cout << "  axioms used:";
        for (const auto& a : rep.axioms_used) std::cout << " " << a;
        std::cout << "\n";
    }
    std::cout << "  verdict: " << rep.verdict;
    if (rep.verdict != "Obstructed" && !rep.reasons.empty()) {
        std::cout << " (";
        for (size_t i = 0; i < rep.reasons.size(); ++i)
            std::cout << (i ? ", " : "") << rep.reasons[i];
        std::cout << ")";
    }
    std::cout << "\n";
}

int cmd_obstruct(LoadedJob& job, bool assume_froyshov, const std::optional<Rat>& only_r,
                 bool json_out) {
    if (assume_froyshov) {
        job.spec.assumptions.theta_nonvanishing_assumed = true;
        if (job.spec.assumptions.assumption_source.empty())
            job.spec.assumptions.assumption_source = "Froyshov h-invariant";
    }
    ObstructionReport rep =
        job.spec.y_seifert
            ? embedding_verdict(*job.spec.y_seifert, job.spec.x, job.spec.assumptions, only_r)
            : embedding_verdict_complex(*job.spec.y_complex, job.spec.y_multiplicities,
                                        job.spec.x, job.spec.assumptions, only_r);
    if (json_out)
        emit(report_to_json(rep));
    else
        print_report(rep);
    return rep.verdict == "Obstructed" ? kExitSuccess : kExitInconclusive;
}

int cmd_sweep(i64 k_min, i64 k_max, bool json_out) {
    if (k_min < 1 || k_min > k_max || k_max > 64)
        throw UnsupportedInput("sweep range must satisfy 1 <= k_min <= k_max <= 64");
    AssumptionSet assumptions;
    assumptions.theta_nonvanishing_assumed = true;
    assumptions.assumption_source = "Froyshov h-invariant";
    FourManifoldModel x = FourManifoldModel::homotopy_s3xs1();

    struct Row {
        i64 k;
        std::vector<i64> mults;
        size_t connections;
        bool all_odd;
        std::string verdict;
    };
    std::vector<Row> rows;
    std::optional<i64> first_parity_failure;
    bool all_obstructed = true;
    for (i64 k = k_min; k <= k_max; ++k) {
        Row row;
        row.k = k;
        row.mults = {2, 3, 6 * k - 1};
        SeifertData y = validate_seifert(row.mults);
        auto conns = enumerate_flat_connections(y);
        row.connections = conns.size();
        row.all_odd = true;
        for (const auto& c : conns)
            if (c.grading % 2 == 0) row.all_odd = false;
        if (!row.all_odd && !first_parity_failure) first_parity_failure = k;
        row.verdict = embedding_verdict(y, x, assumptions).verdict;
        if (row.verdict != "Obstructed") all_obstructed = false;
        rows.push_back(std::move(row));
    }
    if (json_out) {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back(json{{"all_odd", r.all_odd},
                                 {"connections", r.connections},
                                 {"k", r.k},
                                 {"multiplicities", r.mults},
                                 {"verdict", r.verdict}});
        json j{{"first_parity_failure", nullptr}, {"rows", jrows}};
        if (first_parity_failure) j["first_parity_failure"] = *first_parity_failure;
        emit(j);
    } else {
        std::cout << "k  Y  connections  parity  verdict\n";
        for (const auto& r : rows)
            std::cout << r.k << "  " << sigma_name(r.mults) << "  " << r.connections << "  "
                      << (r.all_odd ? "all-odd" : "has-even") << "  " << r.verdict << "\n";
        std::cout << "first parity failure: "
                  << (first_parity_failure ? std::to_string(*first_parity_failure)
                                           : std::string("none"))
                  << "\n";
    }
    return all_obstructed ? kExitSuccess : kExitInconclusive;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Filtered instanton data of Seifert homology spheres and the "
                 "embedding obstruction for homology S^3 x S^1 models"};
    app.require_subcommand(1);

    std::vector<i64> mults;
    std::string input_path;
    bool json_out = false;
    bool assume_froyshov = false;
    std::string r_str = "inf";
    int degree = -1;
    i64 k_min = 0, k_max = 0;

    auto add_common = [&](CLI::App* sub, bool with_mults) -> CLI::Option* {
        CLI::Option* m = nullptr;
        if (with_mults)
            m = sub->add_option("multiplicities", mults, "Seifert multiplicities a1 a2 a3");
        sub->add_option("--input", input_path, "JSON jobspec file");
        sub->add_flag("--json", json_out, "machine-readable output");
        return m;
    };

    CLI::App* sub_flat = app.add_subcommand("flat", "list the irreducible flat connections");
    add_common(sub_flat, true);
    CLI::App* sub_cs = app.add_subcommand("cs", "list exact Chern-Simons values");
    add_common(sub_cs, true);
    CLI::App* sub_grading = app.add_subcommand("grading", "list Floer gradings mod 8");
    add_common(sub_grading, true);
    CLI::App* sub_homology =
        app.add_subcommand("homology", "filtered instanton cohomology groups");
    // exactly three multiplicities here, so the fourth positional can be
    // the degree (vector positionals gobble trailing values unless told not to)
    add_common(sub_homology, true)->expected(3)->allow_extra_args(false);
    auto* degree_opt = sub_homology->add_option("degree", degree, "single degree in 0..7");
    sub_homology->add_option("--r", r_str, "filtration level, a fraction or inf");
    CLI::App* sub_obstruct =
        app.add_subcommand("obstruct", "run the embedding-obstruction criterion");
    add_common(sub_obstruct, true);
    sub_obstruct->add_flag("--assume-froyshov", assume_froyshov,
                           "assume 0 != [theta] (Froyshov h-invariant input)");
    std::string obstruct_r_str;
    auto* obstruct_r =
        sub_obstruct->add_option("--r", obstruct_r_str, "test only this filtration level");
    CLI::App* sub_sweep =
        app.add_subcommand("sweep-example", "Sigma(2,3,6k-1) family sweep");
    sub_sweep->add_option("k_min", k_min, "first k")->required();
    sub_sweep->add_option("k_max", k_max, "last k")->required();
    sub_sweep->add_flag("--json", json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (sub_sweep->parsed()) return cmd_sweep(k_min, k_max, json_out);
        std::string command = app.get_subcommands().front()->get_name();
        LoadedJob job = load_job(command, mults, input_path, true);
        if (sub_flat->parsed()) return cmd_flat(job, json_out);
        if (sub_cs->parsed()) return cmd_cs(job, json_out);
        if (sub_grading->parsed()) return cmd_grading(job, json_out);
        if (sub_homology->parsed())
            return cmd_homology(job, degree, degree_opt->count() > 0, RatInf::parse(r_str),
                                json_out);
        if (sub_obstruct->parsed()) {
            std::optional<Rat> only_r;
            if (obstruct_r->count() > 0) only_r = Rat::parse(obstruct_r_str);
            return cmd_obstruct(job, assume_froyshov, only_r, json_out);
        }
    } catch (const floer::FloerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

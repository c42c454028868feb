// report_io.cpp

#include "floer/report_io.hpp"

#include <algorithm>
#include <set>

#include "floer/errors.hpp"

namespace floer {

using nlohmann::json;

json rat_to_json(const Rat& v) { return v.str(); }
json ratinf_to_json(const RatInf& v) { return v.str(); }

Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected a fraction string");
    return Rat::parse(j.get<std::string>());
}

RatInf ratinf_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected a fraction string or \"inf\"");
    return RatInf::parse(j.get<std::string>());
}

namespace {

json generator_to_json(const Generator& g) {
    return json{{"cs", rat_to_json(g.cs_level)}, {"grading", g.grading}, {"id", g.id}};
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["r"] = ratinf_to_json(c.r);
    j["theta_mode"] = c.theta_mode;
    j["even_below_r"] = c.even_below_r;
    j["complete"] = c.complete;
    if (c.theta_mode == "assumed-nonvanishing") {
        j["axiom_tag"] = c.axiom_tag;
        j["degree1_all"] = c.degree1_all;
        j["degree1_below_r"] = c.degree1_below_r;
    } else {
        j["theta_coefficients"] = c.theta_coefficients;
        j["theta_support_below_r"] = c.theta_support_below_r;
    }
    if (c.has_algebra) {
        json gens = json::array();
        for (const auto& g : c.restricted_generators) gens.push_back(generator_to_json(g));
        json diff = json::array();
        for (const auto& [to, from, coeff] : c.restricted_differential)
            diff.push_back(json{{"coeff", coeff}, {"from", from}, {"to", to}});
        j["restricted_algebra"] = json{{"differential", diff}, {"generators", gens}};
    }
    return j;
}

} // namespace

json report_to_json(const ObstructionReport& rep) {
    json j;
    j["axioms_used"] = rep.axioms_used;
    j["differential_incomplete"] = rep.differential_incomplete;
    json excluded = json::array();
    for (const Rat& v : rep.excluded) excluded.push_back(rat_to_json(v));
    j["excluded"] = excluded;
    json gens = json::array();
    for (const auto& g : rep.generators) gens.push_back(generator_to_json(g));
    j["generators"] = gens;
    j["l_y"] = rep.l_y;
    j["q_value"] = ratinf_to_json(rep.q_value);
    j["r_max"] = ratinf_to_json(rep.r_max);
    j["reasons"] = rep.reasons;
    json tested = json::array();
    for (const auto& t : rep.tested) {
        json tj;
        tj["certified"] = t.certified;
        tj["r"] = rat_to_json(t.r);
        if (t.certified)
            tj["certificate"] = certificate_to_json(t.cert);
        else
            tj["reasons"] = t.reasons;
        tested.push_back(tj);
    }
    j["tested"] = tested;
    j["verdict"] = rep.verdict;
    j["window_nonempty"] = rep.window_nonempty;
    j["y_multiplicities"] = rep.y_multiplicities;
    return j;
}

namespace {

struct TableGen {
    std::string id;
    int grading = 0;
    Rat cs;
};

void fail(VerifyResult& res, const std::string& msg) { res.failures.push_back(msg); }

std::vector<TableGen> read_table(const json& j, VerifyResult& res) {
    std::vector<TableGen> table;
    std::set<std::string> ids;
    for (const auto& gj : j) {
        TableGen g;
        g.id = gj.at("id").get<std::string>();
        g.grading = gj.at("grading").get<int>();
        g.cs = rat_from_json(gj.at("cs"));
        if (!ids.insert(g.id).second) fail(res, "duplicate generator id " + g.id);
        if (g.grading < 0 || g.grading > 7)
            fail(res, "generator " + g.id + " grading outside 0..7");
        if (g.cs < Rat(0) || !(g.cs < Rat(1)))
            fail(res, "generator " + g.id + " cs outside [0,1)");
        table.push_back(std::move(g));
    }
    return table;
}

std::vector<Rat> recompute_excluded(const std::vector<TableGen>& table) {
    std::set<std::pair<i64, i64>> seen;
    std::vector<Rat> out;
    for (const auto& g : table)
        if (seen.insert({g.cs.num(), g.cs.den()}).second) out.push_back(g.cs);
    std::sort(out.begin(), out.end());
    if (!out.empty() && out.front() == Rat(0)) out.push_back(Rat(1));
    return out;
}

std::vector<std::string> sorted_copy(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void check_certificate(const json& cj, const std::vector<TableGen>& table,
                       const std::vector<Rat>& excluded, const RatInf& r_max,
                       const std::vector<std::string>& axioms_used, VerifyResult& res) {
    RatInf r = ratinf_from_json(cj.at("r"));
    std::string mode = cj.at("theta_mode").get<std::string>();
    if (!cj.at("complete").get<bool>()) fail(res, "certificate not marked complete");
    if (!(RatInf(Rat(0)) < r)) fail(res, "certificate level r not positive");
    if (r > r_max) fail(res, "certificate level r above r_max");
    if (!r.is_inf() &&
        std::find(excluded.begin(), excluded.end(), r.finite()) != excluded.end())
        fail(res, "certificate level r lies in the excluded set");

    std::vector<std::string> even_below, deg1_all, deg1_below;
    for (const auto& g : table) {
        bool below = RatInf(g.cs) < r;
        if (g.grading % 2 == 0 && below) even_below.push_back(g.id);
        if (g.grading == 1) {
            deg1_all.push_back(g.id);
            if (below) deg1_below.push_back(g.id);
        }
    }
    auto stated_even = cj.at("even_below_r").get<std::vector<std::string>>();
    if (sorted_copy(stated_even) != sorted_copy(even_below))
        fail(res, "even_below_r does not match the generator table");

    if (mode == "assumed-nonvanishing") {
        if (!even_below.empty()) fail(res, "even-degree generator below r in parity mode");
        auto stated_all = cj.at("degree1_all").get<std::vector<std::string>>();
        auto stated_below = cj.at("degree1_below_r").get<std::vector<std::string>>();
        if (sorted_copy(stated_all) != sorted_copy(deg1_all))
            fail(res, "degree1_all does not match the generator table");
        if (sorted_copy(stated_below) != sorted_copy(deg1_below))
            fail(res, "degree1_below_r does not match the generator table");
        if (deg1_all.empty()) fail(res, "parity certificate over empty degree-1 set");
        if (sorted_copy(deg1_all) != sorted_copy(deg1_below))
            fail(res, "parity certificate excludes a degree-1 generator");
        std::string tag = cj.at("axiom_tag").get<std::string>();
        if (tag.empty()) fail(res, "parity certificate without an axiom tag");
        else if (std::find(axioms_used.begin(), axioms_used.end(), tag) == axioms_used.end())
            fail(res, "axiom tag " + tag + " not listed in axioms_used");
        return;
    }

    if (mode != "explicit-counts" && mode != "coboundary-check") {
        fail(res, "unknown theta_mode " + mode);
        return;
    }
    auto coeffs = cj.at("theta_coefficients").get<std::map<std::string, i64>>();
    auto support = cj.at("theta_support_below_r").get<std::vector<std::string>>();
    std::vector<std::string> expected_support;
    for (const auto& g : table) {
        auto it = coeffs.find(g.id);
        if (it != coeffs.end() && it->second != 0 && RatInf(g.cs) < r) {
            expected_support.push_back(g.id);
            if (g.grading != 1)
                fail(res, "theta support on non-degree-1 generator " + g.id);
        }
    }
    if (sorted_copy(support) != sorted_copy(expected_support))
        fail(res, "theta_support_below_r does not match the stated coefficients");
    if (expected_support.empty()) fail(res, "theta restricts to zero below r");

    if (mode == "explicit-counts") {
        if (!even_below.empty())
            fail(res, "explicit-counts certificate with even-degree generators below r");
        return;
    }

    // coboundary-check: rebuild the embedded algebra and re-run the solve
    if (!cj.contains("restricted_algebra")) {
        fail(res, "coboundary certificate without the restricted algebra");
        return;
    }
    const json& alg = cj.at("restricted_algebra");
    std::vector<Generator> gens;
    for (const auto& gj : alg.at("generators")) {
        Generator g;
        g.id = gj.at("id").get<std::string>();
        g.grading = gj.at("grading").get<int>();
        g.cs_level = rat_from_json(gj.at("cs"));
        gens.push_back(std::move(g));
    }
    std::vector<std::string> alg_ids, below_ids;
    for (const auto& g : gens) alg_ids.push_back(g.id);
    for (const auto& g : table)
        if (RatInf(g.cs) < r) below_ids.push_back(g.id);
    if (sorted_copy(alg_ids) != sorted_copy(below_ids))
        fail(res, "restricted algebra generators differ from the table below r");
    for (const auto& g : gens) {
        auto it = std::find_if(table.begin(), table.end(),
                               [&](const TableGen& t) { return t.id == g.id; });
        if (it == table.end()) continue;
        if (it->grading != g.grading || !(it->cs == g.cs_level))
            fail(res, "restricted algebra generator " + g.id + " disagrees with the table");
    }
    Mat d(gens.size(), std::vector<i64>(gens.size(), 0));
    std::map<std::string, size_t> idx;
    for (size_t i = 0; i < gens.size(); ++i) idx[gens[i].id] = i;
    for (const auto& ej : alg.at("differential")) {
        std::string from = ej.at("from").get<std::string>();
        std::string to = ej.at("to").get<std::string>();
        i64 coeff = ej.at("coeff").get<i64>();
        auto fi = idx.find(from);
        auto ti = idx.find(to);
        if (fi == idx.end() || ti == idx.end()) {
            fail(res, "differential entry off the restricted generator list");
            continue;
        }
        d[ti->second][fi->second] = coeff;
    }
    try {
        FilteredComplex rc = make_complex(gens, d, false);
        CoChain theta;
        theta.degree = 1;
        for (const auto& g : gens) {
            auto it = coeffs.find(g.id);
            if (it != coeffs.end() && it->second != 0) theta.coefficients[g.id] = it->second;
        }
        if (is_coboundary(theta, rc, RatInf::infinity()))
            fail(res, "theta is a coboundary of the embedded algebra");
    } catch (const FloerError& e) {
        fail(res, std::string("embedded algebra rejected: ") + e.what());
    }
}

} // namespace

VerifyResult verify_report(const json& report) {
    VerifyResult res;
    try {
        std::vector<TableGen> table = read_table(report.at("generators"), res);

        std::vector<Rat> stated_excluded;
        for (const auto& v : report.at("excluded")) stated_excluded.push_back(rat_from_json(v));
        std::vector<Rat> expect_excluded = recompute_excluded(table);
        if (stated_excluded != expect_excluded)
            fail(res, "excluded set does not match the generator table");

        RatInf q = ratinf_from_json(report.at("q_value"));
        RatInf r_max = ratinf_from_json(report.at("r_max"));
        if (r_max != RatInf::min(q, RatInf(Rat(1))))
            fail(res, "r_max is not min(q_value, 1)");
        if (r_max.is_inf()) fail(res, "r_max must be finite");

        i64 l_y = report.at("l_y").get<i64>();
        if (l_y != i64(table.size()) + 1)
            fail(res, "l_y does not equal generator count plus one");

        std::string verdict = report.at("verdict").get<std::string>();
        auto axioms = report.at("axioms_used").get<std::vector<std::string>>();
        const json& tested = report.at("tested");
        size_t certified_count = 0;
        for (const auto& tj : tested)
            if (tj.at("certified").get<bool>()) ++certified_count;

        if (verdict == "Obstructed") {
            if (certified_count != 1)
                fail(res, "Obstructed verdict needs exactly one certified level");
            else {
                const json& last = tested.back();
                if (!last.at("certified").get<bool>())
                    fail(res, "certified level is not the final tested entry");
                else
                    check_certificate(last.at("certificate"), table, expect_excluded, r_max,
                                      axioms, res);
            }
        } else if (verdict == "Inconclusive") {
            if (certified_count != 0)
                fail(res, "Inconclusive verdict despite a certified level");
            if (report.at("reasons").empty())
                fail(res, "Inconclusive verdict without reasons");
        } else {
            fail(res, "unknown verdict " + verdict);
        }
    } catch (const json::exception& e) {
        fail(res, std::string("malformed report: ") + e.what());
    } catch (const FloerError& e) {
        fail(res, std::string("malformed report: ") + e.what());
    }
    res.ok = res.failures.empty();
    return res;
}

} // namespace floer

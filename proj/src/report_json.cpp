// SPDX-License-Identifier: Apache-2.0
#include "symbell/report_json.hpp"

#include "symbell/util.hpp"

namespace symbell {

using nlohmann::json;

json to_json(const EigenReport& report) {
    return json{{"is_eigen", report.is_eigen},
                {"eigenvalue", to_string(report.eigenvalue)},
                {"residual_norm_sq", to_string(report.residual_norm_sq)}};
}

json to_json(const SpectralReport& report) {
    json j{{"n", report.n},
           {"operator", json{{"family", report.operator_family},
                             {"hash", report.operator_hash}}},
           {"method", report.method},
           {"max_abs", report.max_abs},
           {"min_eigenvalue", report.min_eigenvalue},
           {"max_eigenvalue", report.max_eigenvalue},
           {"eigenvalues", report.eigenvalues},
           {"converged", report.converged}};
    if (report.method == "dense") {
        j["extremal_multiplicity"] = report.extremal_multiplicity;
        json membership = json::array();
        for (const auto& dm : report.dicke_membership)
            membership.push_back(json{{"m", dm.m}, {"residual", dm.residual}});
        j["dicke_membership"] = membership;
    } else {
        j["iterations"] = report.iterations;
    }
    return j;
}

SpectralReport spectral_report_from_json(const json& j) {
    SpectralReport report;
    report.n = j.at("n").get<int>();
    report.operator_family = j.at("operator").at("family").get<std::string>();
    report.operator_hash = j.at("operator").at("hash").get<std::string>();
    report.method = j.at("method").get<std::string>();
    report.max_abs = j.at("max_abs").get<double>();
    report.min_eigenvalue = j.at("min_eigenvalue").get<double>();
    report.max_eigenvalue = j.at("max_eigenvalue").get<double>();
    report.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    report.converged = j.at("converged").get<bool>();
    if (report.method == "dense") {
        report.extremal_multiplicity = j.at("extremal_multiplicity").get<int>();
        for (const auto& dm : j.at("dicke_membership"))
            report.dicke_membership.push_back(
                {dm.at("m").get<int>(), dm.at("residual").get<double>()});
    } else {
        report.iterations = j.at("iterations").get<long>();
    }
    return report;
}

json to_json(const TheoremCheck& check) {
    return json{{"n", check.n},
                {"m", check.m},
                {"is_eigen", check.is_eigen},
                {"eigenvalue", to_string(check.eigenvalue)},
                {"expected", to_string(check.expected)},
                {"matches", check.matches}};
}

json to_json(const ConjectureReport& report) {
    json central = json::array();
    for (const auto& entry : report.central) {
        json e{{"m", entry.m},
               {"eigenvalue", to_string(entry.eigenvalue)},
               {"is_eigen", entry.is_eigen},
               {"in_extremal", entry.in_extremal}};
        if (entry.membership_residual)
            e["membership_residual"] = *entry.membership_residual;
        else
            e["membership_residual"] = nullptr;
        central.push_back(e);
    }
    json j{{"n", report.n},
           {"method", report.method},
           {"max_abs", report.max_abs},
           {"formula", to_string(report.formula)},
           {"agrees", report.agrees},
           {"central", central},
           {"converged", report.converged}};
    if (report.method == "iterative") j["iterations"] = report.iterations;
    return j;
}

json to_json(const TableRow& row) {
    json j{{"n", row.n},
           {"m", row.m},
           {"lambda", to_string(row.lambda)},
           {"max_abs", row.max_abs},
           {"membership_residual", row.membership_residual}};
    if (row.sign_matches_paper)
        j["sign_matches_paper"] = *row.sign_matches_paper;
    else
        j["sign_matches_paper"] = nullptr;
    return j;
}

json to_json(const BoundResult& result) {
    json axes = json::array();
    for (char a : result.axes) axes.push_back(std::string(1, a));
    return json{{"L", to_string(result.value)},
                {"L_float", to_double(result.value)},
                {"axes", axes},
                {"assignment", result.assignment},
                {"method", result.method}};
}

json to_json(const CoefficientGroups& groups) {
    json gs = json::array();
    for (const auto& group : groups.groups()) {
        json g = json::array();
        for (const auto& entry : group) g.push_back(to_string(entry));
        gs.push_back(g);
    }
    return json{{"parties", groups.parties()},
                {"groups", gs},
                {"canonical", serialize_pi(groups)}};
}

json make_envelope(const std::string& command, json config, json result) {
    return json{{"schema", "symbell/v1"},
                {"command", command},
                {"generated_at", iso8601_utc_now()},
                {"config", std::move(config)},
                {"result", std::move(result)}};
}

}  // namespace symbell

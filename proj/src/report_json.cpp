#include "rainbow/report_json.hpp"

namespace rainbow {

using nlohmann::json;

namespace {

json rational(const Rational &r) { return {{"num", r.num}, {"den", r.den}}; }

std::string side_name(ExtendSide s) { return s == ExtendSide::into_y0 ? "into_y0" : "into_x"; }

json optional_set(const std::vector<Vertex> &vs, bool keep) { return keep ? json(vs) : json(nullptr); }

} // namespace

json to_json(const RainbowWitness &w) {
    return {{"kind", w.kind == WitnessKind::cycle ? "cycle" : "path"}, {"vertices", w.vertices}, {"colors", w.colors}};
}

json to_json(const FinderTrace &t) {
    json j{
        {"ell", t.ell},
        {"n", t.n},
        {"input_edges", t.input_edges},
        {"reduced_edges", t.reduced_edges},
        {"min_color_degree", t.min_color_degree},
        {"replication", t.replication},
        {"z", t.z},
        {"zeta", t.zeta},
        {"x_size", t.x_set.size()},
        {"x", t.x_set},
        {"hypotheses_met", t.hypotheses_met},
        {"case", to_string(t.proof_case)},
        {"outcome", to_string(t.outcome)},
        {"note", t.note},
        {"witness", t.witness ? to_json(*t.witness) : json(nullptr)},
    };
    if (t.proof_case == ProofCase::case1) {
        j["case1"] = {
            {"e0", t.e0 ? json::array({t.e0->first, t.e0->second}) : json(nullptr)},
            {"x_plus_size", t.x_plus_size},
            {"c_rep", t.c_rep},
            {"layer_sizes", t.layer_sizes},
            {"f_arcs", t.f_arcs},
            {"f_lower_bound", t.f_lower_bound},
            {"x_plus", optional_set(t.x_plus, !t.x_plus.empty())},
        };
    }
    if (t.proof_case == ProofCase::case2a || t.proof_case == ProofCase::case2b) {
        json attempts = json::array();
        for (const auto &a : t.attempts) {
            json steps = json::array();
            for (const auto &s : a.steps) {
                steps.push_back({{"side", side_name(s.side)},
                                 {"path_vertices", s.path_vertices},
                                 {"feasible_vertices", s.feasible_vertices},
                                 {"feasible_colors", s.feasible_colors},
                                 {"lower_bound", s.lower_bound},
                                 {"chosen", s.chosen ? json(*s.chosen) : json(nullptr)}});
            }
            attempts.push_back({{"start", a.start}, {"closed", a.closed}, {"steps", std::move(steps)}});
        }
        j["case2"] = {
            {"y_size", t.y_size},
            {"y_h_size", t.y_h_size},
            {"y_d_size", t.y_d_size},
            {"y0_size", t.y0_size},
            {"d_edges", t.d_edges},
            {"h0_edges", t.h0_edges},
            {"max_d_degree_x", t.max_d_degree_x},
            {"y_h", t.y_h},
            {"y_d", t.y_d},
            {"y0", optional_set(t.y0, !t.y0.empty())},
            {"attempts", std::move(attempts)},
        };
    }
    return j;
}

json to_json(const SeparationReport &r) {
    json records = json::array();
    for (const auto &rec : r.records) {
        records.push_back({{"y", rec.y},
                           {"sigma", rec.sigma()},
                           {"rho", rec.rho()},
                           {"separating", rec.separating},
                           {"restricted", rec.restricted}});
    }
    return {
        {"v", r.v},
        {"x", r.x_set},
        {"y", r.y_set},
        {"n", r.n},
        {"min_color_degree", r.min_color_degree},
        {"replication", r.replication},
        {"x_unique", r.x_unique},
        {"sigma_sum", r.sigma_sum},
        {"rho_sum", r.rho_sum},
        {"sigma_average", rational(r.sigma_average)},
        {"rho_average", rational(r.rho_average)},
        {"bound", rational(r.bound)},
        {"d_arcs", r.d_arcs},
        {"d_tails_unique", r.d_tails_unique},
        {"d_out_degree_ok", r.d_out_degree_ok},
        {"edge_minimal", r.edge_minimal},
        {"holds", r.holds},
        {"records", std::move(records)},
    };
}

json to_json(const ProbeReport &r) {
    json chains = json::array();
    for (const auto &c : r.chains) {
        chains.push_back({{"seed", c.seed},
                          {"steps", c.steps},
                          {"accepted", c.accepted},
                          {"restarts", c.restarts},
                          {"cross_checks", c.cross_checks},
                          {"final_temperature", c.temperature},
                          {"best_rainbow_cycles", c.best.rainbow_cycles},
                          {"best_min_color_degree", c.best.min_color_degree},
                          {"best_feasible", c.best_feasible}});
    }
    const auto &best = r.best();
    return {
        {"ell", r.ell},
        {"n", r.n},
        {"budget", r.options.budget},
        {"seed", r.options.seed},
        {"init", to_string(r.options.init)},
        {"chain_count", r.options.chains},
        {"best_chain", r.best_chain},
        {"best_feasible", best.best_feasible},
        {"best_min_color_degree", best.best.min_color_degree},
        {"best_rainbow_cycles", best.best.rainbow_cycles},
        {"chains", std::move(chains)},
    };
}

json to_json(const Reproducer &r) { return {{"check", r.check}, {"ecg", r.ecg}, {"params", r.params}}; }

Reproducer reproducer_from_json(const json &j) {
    return {j.at("check").get<std::string>(), j.at("ecg").get<std::string>(), j.at("params")};
}

namespace {

json failures_json(const std::vector<Reproducer> &fs) {
    json out = json::array();
    for (const auto &f : fs) {
        out.push_back(to_json(f));
    }
    return out;
}

} // namespace

json to_json(const TheoremReport &r) {
    json rows = json::array();
    for (const auto &row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"target", row.target},
                        {"samples", row.samples},
                        {"found", row.found},
                        {"boost_rejections", row.boost_rejections}});
    }
    return {{"ell", r.ell},           {"seed", r.seed},     {"claim_applies", r.claim_applies},
            {"passed", r.passed()},   {"rows", std::move(rows)}, {"failures", failures_json(r.failures)}};
}

json to_json(const DeltaBoundReport &r) {
    json rows = json::array();
    for (const auto &row : r.rows) {
        rows.push_back(
            {{"n", row.n}, {"checked", row.checked}, {"vacuous", row.vacuous}, {"violations", row.violations}});
    }
    return {{"ell", r.ell},
            {"seed", r.seed},
            {"passed", r.passed()},
            {"rows", std::move(rows)},
            {"failures", failures_json(r.failures)}};
}

json to_json(const PropertyReport &r) {
    json tallies = json::object();
    for (const auto &[name, t] : r.tallies) {
        tallies[name] = {{"pass", t.pass}, {"fail", t.fail}, {"vacuous", t.vacuous}};
    }
    return {{"seed", r.seed},
            {"instances", r.instances},
            {"passed", r.passed()},
            {"tallies", std::move(tallies)},
            {"failures", failures_json(r.failures)}};
}

} // namespace rainbow

// nichols: exact reflection calculus for braided vector spaces of diagonal
// type over fields of positive characteristic.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nichols/cartan.hpp"
#include "nichols/cartan_graph.hpp"
#include "nichols/classification.hpp"
#include "nichols/errors.hpp"
#include "nichols/neighborhoods.hpp"
#include "nichols/reflection.hpp"
#include "nichols/serialize.hpp"

namespace {

using nichols::Budgets;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int env_budget(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        size_t pos = 0;
        int n = std::stoi(v, &pos);
        if (pos != std::string(v).size() || n < 1) throw std::invalid_argument(name);
        return n;
    } catch (const std::exception&) {
        throw nichols::BadParameter(std::string(name) + " must be a positive integer, got '" +
                                    v + "'");
    }
}

Budgets budgets_from_env() {
    Budgets b;
    b.max_points = env_budget("NICHOLS_BUDGET_POINTS", b.max_points);
    b.max_roots = env_budget("NICHOLS_BUDGET_ROOTS", b.max_roots);
    return b;
}

nichols::GDDiagram read_diagram(const std::string& path) {
    if (path.empty() || path == "-") return nichols::load_diagram_json(std::cin);
    std::ifstream in(path);
    if (!in) throw nichols::ParseError("cannot open input file: " + path);
    return nichols::load_diagram_json(in);
}

std::string perm_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i] + 1);
    }
    return s + "]";
}

std::string params_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

json perm_json(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

json report_json(const nichols::VerificationReport& r) {
    json j;
    j["row"] = r.row_id;
    j["pass"] = r.pass();
    j["theta"] = r.theta;
    j["N"] = r.N;
    j["p"] = r.p;
    j["zeta_exp"] = r.zeta_exp;
    j["points"] = r.points;
    j["exchange_vertices"] = r.exchange_vertices;
    j["positive_roots"] = r.n_positive;
    if (!r.appendix_label.empty()) {
        j["matched_list"] = {{"label", r.appendix_label},
                             {"point", r.appendix_point},
                             {"perm", perm_json(r.appendix_perm)}};
    } else {
        j["matched_list"] = nullptr;
    }
    if (r.witness) {
        j["witness"] = {{"point", r.witness->first},
                        {"variant", nichols::to_string(r.witness->second.variant)},
                        {"sigma", perm_json(r.witness->second.sigma.vec())},
                        {"params", r.witness->second.params}};
    } else {
        j["witness"] = nullptr;
    }
    j["checks"] = {{"graph_finite", r.graph_finite},
                   {"diagrams_match", r.diagrams_match},
                   {"list_match_unique", r.appendix_unique},
                   {"count_matches", r.count_matches},
                   {"exchange_count_matches", r.exchange_count_matches},
                   {"witness_found", r.witness_found},
                   {"axioms_pass", r.axioms_pass}};
    j["failures"] = r.failures;
    return j;
}

void print_report(std::ostream& os, const nichols::VerificationReport& r) {
    os << "row " << r.row_id << ": " << (r.pass() ? "PASS" : "FAIL") << " (N=" << r.N
       << " p=" << r.p << " zeta_exp=" << r.zeta_exp << ")\n";
    os << "  points: " << r.points << ", exchange vertices: " << r.exchange_vertices << "\n";
    os << "  positive roots: " << r.n_positive;
    if (!r.appendix_label.empty())
        os << ", matched list: " << r.appendix_label << " at point " << r.appendix_point
           << ", perm " << perm_str(r.appendix_perm);
    os << "\n";
    if (r.witness)
        os << "  witness: " << nichols::to_string(r.witness->second.variant) << " at point "
           << r.witness->first << ", sigma " << perm_str(r.witness->second.sigma.vec())
           << ", params " << params_str(r.witness->second.params) << "\n";
    for (const auto& f : r.failures) os << "  failure: " << f << "\n";
}

int cmd_cartan(const std::string& in_path) {
    auto D = read_diagram(in_path);
    std::cout << nichols::emit_cartan_text(nichols::cartan_matrix(D));
    return kExitPass;
}

int cmd_reflect(const std::string& in_path, int at) {
    auto D = read_diagram(in_path);
    if (at < 1 || at > D.theta())
        throw nichols::BadParameter("--at must be in 1.." + std::to_string(D.theta()));
    std::cout << nichols::emit_diagram_json(nichols::reflect_diagram(D, at - 1));
    return kExitPass;
}

int cmd_roots(const std::string& in_path) {
    auto D = read_diagram(in_path);
    Budgets b = budgets_from_env();
    auto G = nichols::build_graph(D, b.max_points);
    auto R = nichols::enumerate_roots(G, b.max_roots);
    std::cout << nichols::emit_roots_text(R.positive[G.base()]);
    return kExitPass;
}

int cmd_exchange(const std::string& in_path, const std::string& dot_path) {
    auto D = read_diagram(in_path);
    Budgets b = budgets_from_env();
    auto G = nichols::build_graph(D, b.max_points);
    auto X = nichols::exchange_graph(G);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw nichols::ParseError("cannot open output file: " + dot_path);
        out << nichols::emit_exchange_dot(G, X);
    } else {
        std::cout << nichols::emit_exchange_text(G, X);
    }
    return kExitPass;
}

int cmd_check_neighborhood(const std::string& in_path) {
    auto D = read_diagram(in_path);
    Budgets b = budgets_from_env();
    auto G = nichols::build_graph(D, b.max_points);
    auto w = nichols::goodnei_exists(G);
    if (!w) {
        std::cout << "none\n";
        return kExitFail;
    }
    std::cout << "point " << w->first << ": variant "
              << nichols::to_string(w->second.variant) << ", sigma "
              << perm_str(w->second.sigma.vec()) << ", params "
              << params_str(w->second.params) << "\n";
    return kExitPass;
}

int cmd_verify_tables(const std::string& fixture_dir, int row, int prime, bool as_json) {
    auto fx = nichols::load_fixtures(fixture_dir);
    Budgets b = budgets_from_env();

    if (row != 0) {
        const nichols::ParametricRow* target = nullptr;
        for (const auto& r : fx.rows)
            if (r.row_id == std::to_string(row)) target = &r;
        if (!target) throw nichols::BadParameter("no fixture row " + std::to_string(row));
        auto rep = nichols::verify_row(*target, fx.lists, b, prime);
        if (as_json)
            std::cout << report_json(rep).dump(2) << "\n";
        else
            print_report(std::cout, rep);
        return rep.pass() ? kExitPass : kExitFail;
    }

    auto all = nichols::verify_all(fx, b, prime);
    if (as_json) {
        json j;
        j["pass"] = all.pass();
        j["rows"] = json::array();
        for (const auto& rep : all.rows) j["rows"].push_back(report_json(rep));
        j["lists"] = {{"matched", all.matched_lists},
                      {"unmatched", all.unmatched_lists},
                      {"counts_covered", all.counts_covered}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& rep : all.rows) print_report(std::cout, rep);
        std::cout << "lists matched: " << all.matched_lists.size() << "/"
                  << (all.matched_lists.size() + all.unmatched_lists.size());
        if (!all.unmatched_lists.empty()) {
            std::cout << " (unmatched:";
            for (const auto& l : all.unmatched_lists) std::cout << " " << l;
            std::cout << ")";
        }
        std::cout << "\ncounts covered: " << (all.counts_covered ? "yes" : "no") << "\n";
        std::cout << "overall: " << (all.pass() ? "PASS" : "FAIL") << "\n";
    }
    return all.pass() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reflection calculus for diagonal braidings in positive characteristic"};
    app.require_subcommand(1);

    std::string in_path;
    std::string dot_path;
    std::string fixture_dir = NICHOLS_FIXTURE_DIR;
    int at = 0;
    int row = 0;
    int prime = 0;
    bool as_json = false;

    auto add_in = [&in_path](CLI::App* sub) {
        sub->add_option("--in", in_path, "diagram JSON file ('-' or absent: stdin)");
    };

    auto* c_cartan = app.add_subcommand("cartan", "Cartan matrix of a diagram");
    add_in(c_cartan);
    auto* c_reflect = app.add_subcommand("reflect", "reflect a diagram at a vertex");
    add_in(c_reflect);
    c_reflect->add_option("--at", at, "vertex index, 1-based")->required();
    auto* c_roots = app.add_subcommand("roots", "positive roots at the base point");
    add_in(c_roots);
    auto* c_ex = app.add_subcommand("exchange-graph", "exchange graph of the reflection closure");
    add_in(c_ex);
    c_ex->add_option("--dot", dot_path, "write DOT to this file instead of a text summary");
    auto* c_nei = app.add_subcommand("check-neighborhood", "search for a good neighborhood");
    add_in(c_nei);
    auto* c_ver = app.add_subcommand("verify-tables", "verify the fixture corpus");
    c_ver->add_option("--row", row, "verify a single row");
    c_ver->add_option("--prime", prime, "override the characteristic");
    c_ver->add_flag("--json", as_json, "machine-readable report");
    c_ver->add_option("--fixtures", fixture_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInput : kExitPass;
    }

    try {
        if (c_cartan->parsed()) return cmd_cartan(in_path);
        if (c_reflect->parsed()) return cmd_reflect(in_path, at);
        if (c_roots->parsed()) return cmd_roots(in_path);
        if (c_ex->parsed()) return cmd_exchange(in_path, dot_path);
        if (c_nei->parsed()) return cmd_check_neighborhood(in_path);
        if (c_ver->parsed()) return cmd_verify_tables(fixture_dir, row, prime, as_json);
    } catch (const nichols::Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        bool input_error = e.code() == "ParseError" || e.code() == "BadParameter" ||
                           e.code() == "AmbientMismatch" || e.code() == "SizeMismatch" ||
                           e.code() == "RankMismatch";
        return input_error ? kExitInput : kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error[Internal]: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInput;
}

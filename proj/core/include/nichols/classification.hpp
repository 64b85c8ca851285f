#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nichols/cartan_graph.hpp"
#include "nichols/neighborhoods.hpp"

namespace nichols {

// A diagram with labels still parametric in z (a primitive root of unity of
// order zeta_order). Label grammar: 1, -1, z, -z, z^k, z^-k, -z^k.
struct ParametricDiagram {
    int theta = 0;
    std::vector<std::string> vertex_labels;
    std::vector<std::tuple<int, int, std::string>> edge_labels; // 0-based, i < j
};

// Node token of a row's exchange-graph picture: diagram number k (1-based
// into the row's diagram list), optionally relabeled by a subscripted tau.
// Documentation data: count verification uses graph_nodes.
struct NodeToken {
    std::string tau; // digits, e.g. "12435"; empty = untwisted
    int k = 0;
};

struct ParametricRow {
    std::string row_id; // "11".."15", "17".."19", "21"
    int theta = 0;
    int zeta_order = 0;    // 3, 4 or 5
    int char_excluded = 0; // the one forbidden characteristic
    int graph_nodes = 0;   // declared exchange-graph vertex count
    std::vector<ParametricDiagram> diagrams;
    std::vector<NodeToken> node_tokens;
};

struct RootList {
    std::string label; // e.g. "A.Nr1"
    int theta = 0;
    std::vector<Root> roots; // positive roots, source order
};

struct FixtureSet {
    std::vector<ParametricRow> rows; // ascending row_id
    std::vector<RootList> lists;     // A then B then C lists in source order
};

struct Instantiation {
    int N = 0;
    int p = 0;
    int zeta_exp = 0; // z := zeta_N^{zeta_exp}
};

// Exponent of a parametric label once z = zeta_N^{zeta_exp}; -1 contributes
// N/2 (N must be even for any negative label).
int parse_label(const std::string& s, int N, int zeta_exp);

GDDiagram instantiate_diagram(const ParametricDiagram& pd, const Ambient& amb, int zeta_exp);

// Smallest admissible prime together with the canonical N = lcm(2, zeta_order)
// and zeta_exp = N / zeta_order.
Instantiation default_instantiation(const ParametricRow& row);

// Validates: p prime, p != char_excluded, gcd(N, p) = 1, ord(zeta_N^zeta_exp)
// = zeta_order, and N even whenever a negative label occurs.
std::vector<GDDiagram> instantiate_row(const ParametricRow& row, int p, int zeta_exp, int N);

// "1^{2}234" -> (2,1,1,1,0). Digits are 1-based simple-root indices.
Root parse_root_notation(const std::string& s, int theta);
std::string emit_root_notation(const Root& v);

// Permutation sigma with {v o sigma : v in computed} = target as multisets,
// where (v o sigma)[j] = v[sigma[j]].
std::optional<Permutation> root_perm_match(const std::vector<Root>& computed,
                                           const std::vector<Root>& target);

// Both reading conventions of a tau subscript (digit string as the image
// list of a permutation, and its inverse), deduplicated.
std::vector<GDDiagram> tau_readings(const GDDiagram& D, const std::string& tau);

std::vector<ParametricRow> load_rows(const std::string& path);
// One list file; label_prefix "A"/"B"/"C". Asserts each header count.
std::vector<RootList> load_root_lists(const std::string& path, const std::string& label_prefix);
// rows.toml + appendix_{a,b,c}.txt from a directory.
FixtureSet load_fixtures(const std::string& dir);

struct Budgets {
    int max_points = kDefaultPointBudget;
    int max_roots = kDefaultRootBudget;
};

struct VerificationReport {
    std::string row_id;
    int theta = 0;
    int N = 0, p = 0, zeta_exp = 0;

    int points = 0;
    int exchange_vertices = 0;
    int n_positive = -1;
    std::string appendix_label; // matched list, empty when none
    int appendix_point = -1;    // point where the match was found
    std::vector<int> appendix_perm;
    std::optional<std::pair<int, NeighborhoodWitness>> witness;
    AxiomReport axioms{};

    bool graph_finite = false;           // (i)
    bool diagrams_match = false;         // (ii) iso classes == fixture list
    bool appendix_unique = false;        // (iii) exactly one list matches
    bool count_matches = false;          // (iv) |Delta_+| == list count
    bool exchange_count_matches = false; // (v) vertices == graph_nodes
    bool witness_found = false;          // (vi)
    bool axioms_pass = false;            // (vii)

    std::vector<std::string> failures;

    bool pass() const
    {
        return graph_finite && diagrams_match && appendix_unique && count_matches &&
               exchange_count_matches && witness_found && axioms_pass;
    }
};

// Sub-check failures are recorded in the report, never thrown. p_override = 0
// picks the default instantiation.
VerificationReport verify_row(const ParametricRow& row, const std::vector<RootList>& lists,
                              const Budgets& budgets = {}, int p_override = 0);

struct AllReport {
    std::vector<VerificationReport> rows;
    std::vector<std::string> matched_lists;   // labels matched by some row
    std::vector<std::string> unmatched_lists; // labels no row realizes pointwise
    bool counts_covered = false;              // every list's cardinality realized

    bool pass() const
    {
        if (!counts_covered) return false;
        for (const auto& r : rows)
            if (!r.pass()) return false;
        return true;
    }
};

AllReport verify_all(const FixtureSet& fx, const Budgets& budgets = {}, int p_override = 0);

} // namespace nichols

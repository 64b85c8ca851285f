#include "nichols/classification.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError("trailing characters in " + what + ": " + s);
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected integer for " + what + ": " + s);
    }
}

} // namespace

int parse_label(const std::string& s0, int N, int zeta_exp) {
    std::string s;
    for (char c : s0)
        if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty diagram label");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-') { neg = true; i = 1; }
    long long e = 0;
    if (s.substr(i) == "1") {
        e = 0;
    } else {
        if (i >= s.size() || s[i] != 'z') throw ParseError("bad diagram label: " + s0);
        ++i;
        long long k = 1;
        if (i < s.size()) {
            if (s[i] != '^') throw ParseError("bad diagram label: " + s0);
            k = parse_int(s.substr(i + 1), "label exponent");
        }
        e = k * zeta_exp;
    }
    if (neg) {
        if (N % 2 != 0)
            throw BadParameter("label " + s0 + " requires an even N, got N=" + std::to_string(N));
        e += N / 2;
    }
    return static_cast<int>(((e % N) + N) % N);
}

GDDiagram instantiate_diagram(const ParametricDiagram& pd, const Ambient& amb, int zeta_exp) {
    std::vector<int> verts;
    verts.reserve(pd.vertex_labels.size());
    for (const auto& s : pd.vertex_labels) verts.push_back(parse_label(s, amb.N, zeta_exp));
    std::vector<std::tuple<int, int, int>> edges;
    for (const auto& [i, j, lab] : pd.edge_labels)
        edges.emplace_back(i, j, parse_label(lab, amb.N, zeta_exp));
    return GDDiagram(amb, pd.theta, verts, edges);
}

Instantiation default_instantiation(const ParametricRow& row) {
    Instantiation inst;
    inst.N = (row.zeta_order % 2 == 0) ? row.zeta_order : 2 * row.zeta_order;
    inst.zeta_exp = inst.N / row.zeta_order;
    for (int p = 2;; ++p) {
        if (!is_prime(p) || p == row.char_excluded || gcd_int(inst.N, p) != 1) continue;
        inst.p = p;
        break;
    }
    return inst;
}

std::vector<GDDiagram> instantiate_row(const ParametricRow& row, int p, int zeta_exp, int N) {
    if (p == row.char_excluded)
        throw BadParameter("row " + row.row_id + " excludes characteristic " + std::to_string(p));
    if (order_of_exp(zeta_exp, N) != row.zeta_order)
        throw BadParameter("zeta_N^" + std::to_string(zeta_exp) + " has order " +
                           std::to_string(order_of_exp(zeta_exp, N)) + ", row needs " +
                           std::to_string(row.zeta_order));
    Ambient amb = make_ambient(N, p); // validates primality and gcd(N, p) = 1
    std::vector<GDDiagram> out;
    out.reserve(row.diagrams.size());
    for (const auto& pd : row.diagrams) out.push_back(instantiate_diagram(pd, amb, zeta_exp));
    return out;
}

Root parse_root_notation(const std::string& s0, int theta) {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty root token");
    Root v(theta, 0);
    size_t i = 0;
    while (i < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad root token: " + s0);
        int d = s[i] - '0';
        if (d < 1 || d > theta)
            throw ParseError("simple-root index " + std::to_string(d) + " out of range in: " + s0);
        ++i;
        long long k = 1;
        if (i < s.size() && s[i] == '^') {
            if (i + 1 >= s.size() || s[i + 1] != '{')
                throw ParseError("malformed exponent in: " + s0);
            size_t close = s.find('}', i + 2);
            if (close == std::string::npos) throw ParseError("malformed exponent in: " + s0);
            k = parse_int(s.substr(i + 2, close - i - 2), "root exponent");
            if (k < 1) throw ParseError("non-positive exponent in: " + s0);
            i = close + 1;
        }
        v[d - 1] += static_cast<int>(k);
    }
    return v;
}

std::string emit_root_notation(const Root& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] < 0) throw BadParameter("cannot emit a negative coefficient");
        out += std::to_string(i + 1);
        if (v[i] > 1) out += "^{" + std::to_string(v[i]) + "}";
    }
    if (out.empty()) throw BadParameter("cannot emit the zero vector");
    return out;
}

std::optional<Permutation> root_perm_match(const std::vector<Root>& computed,
                                           const std::vector<Root>& target) {
    if (computed.size() != target.size()) return std::nullopt;
    if (target.empty()) return std::nullopt;
    const int theta = static_cast<int>(target.front().size());
    std::vector<Root> want = target;
    std::sort(want.begin(), want.end());
    std::vector<int> sig(theta);
    for (int i = 0; i < theta; ++i) sig[i] = i;
    do {
        std::vector<Root> got;
        got.reserve(computed.size());
        for (const auto& v : computed) {
            Root w(theta);
            for (int j = 0; j < theta; ++j) w[j] = v[sig[j]];
            got.push_back(std::move(w));
        }
        std::sort(got.begin(), got.end());
        if (got == want) return Permutation(sig);
    } while (std::next_permutation(sig.begin(), sig.end()));
    return std::nullopt;
}

std::vector<GDDiagram> tau_readings(const GDDiagram& D, const std::string& tau) {
    if (static_cast<int>(tau.size()) != D.theta())
        throw ParseError("tau subscript "+ tau + " does not match rank " +
                         std::to_string(D.theta()));
    std::vector<int> s1(tau.size());
    for (size_t m = 0; m < tau.size(); ++m) {
        if (!std::isdigit(static_cast<unsigned char>(tau[m])))
            throw ParseError("bad tau subscript: " + tau);
        s1[m] = tau[m] - '1';
    }
    Permutation p1(s1); // validates bijectivity
    Permutation p2 = p1.inverse();
    std::vector<GDDiagram> out;
    out.push_back(apply_permutation(D, p1));
    if (!(p2 == p1)) {
        GDDiagram alt = apply_permutation(D, p2);
        if (!(alt == out.front())) out.push_back(std::move(alt));
    }
    return out;
}

// ---------------------------------------------------------------------------
// fixture files

namespace {

// Minimal reader for the fixed rows.toml grammar: [section] headers, integer
// scalars, and (possibly multi-line) arrays of double-quoted strings.
struct TomlValue {
    enum class Kind { Int, Str, Arr } kind = Kind::Int;
    long long num = 0;
    std::string str;
    std::vector<std::string> arr;
};

using TomlSection = std::map<std::string, TomlValue>;

std::string cut_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        else if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

// Consume quoted elements of an array from `s`; returns true when the
// closing bracket was reached.
bool take_array_elems(const std::string& s, std::vector<std::string>& out,
                      const std::string& where) {
    size_t i = 0;
    auto ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    for (;;) {
        ws();
        if (i >= s.size()) return false;
        if (s[i] == ']') return true;
        if (s[i] == ',') { ++i; continue; }
        if (s[i] != '"') throw ParseError("expected string in array at " + where);
        size_t close = s.find('"', i + 1);
        if (close == std::string::npos) throw ParseError("unterminated string at " + where);
        out.push_back(s.substr(i + 1, close - i - 1));
        i = close + 1;
    }
}

std::map<std::string, TomlSection> read_toml(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture file: " + path);
    std::map<std::string, TomlSection> doc;
    std::string cur;
    std::string line;
    std::string arr_key;
    bool in_arr = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = path + ":" + std::to_string(lineno);
        std::string t = strip(cut_comment(line));
        if (in_arr) {
            if (take_array_elems(t, doc[cur][arr_key].arr, where)) in_arr = false;
            continue;
        }
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError("malformed section header at " + where);
            cur = strip(t.substr(1, t.size() - 2));
            doc[cur];
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos || cur.empty())
            throw ParseError("expected key = value at " + where);
        std::string key = strip(t.substr(0, eq));
        std::string val = strip(t.substr(eq + 1));
        TomlValue v;
        if (!val.empty() && val.front() == '"') {
            if (val.size() < 2 || val.back() != '"')
                throw ParseError("unterminated string at " + where);
            v.kind = TomlValue::Kind::Str;
            v.str = val.substr(1, val.size() - 2);
        } else if (!val.empty() && val.front() == '[') {
            v.kind = TomlValue::Kind::Arr;
            doc[cur][key] = v;
            if (!take_array_elems(val.substr(1), doc[cur][key].arr, where)) {
                arr_key = key;
                in_arr = true;
            }
            continue;
        } else {
            v.kind = TomlValue::Kind::Int;
            v.num = parse_int(val, where);
        }
        doc[cur][key] = std::move(v);
    }
    if (in_arr) throw ParseError("unterminated array in " + path);
    return doc;
}

long long need_int(const TomlSection& sec, const std::string& key, const std::string& where) {
    auto it = sec.find(key);
    if (it == sec.end() || it->second.kind != TomlValue::Kind::Int)
        throw ParseError("missing integer key '" + key + "' in " + where);
    return it->second.num;
}

const std::vector<std::string>& need_arr(const TomlSection& sec, const std::string& key,
                                         const std::string& where) {
    auto it = sec.find(key);
    if (it == sec.end() || it->second.kind != TomlValue::Kind::Arr)
        throw ParseError("missing array key '" + key + "' in " + where);
    return it->second.arr;
}

// "v z z -1 ; e 1-2 z^-1 ; e 2-3 z" -> ParametricDiagram
ParametricDiagram parse_diagram_string(const std::string& s, int theta) {
    ParametricDiagram pd;
    pd.theta = theta;
    std::stringstream chunks(s);
    std::string chunk;
    while (std::getline(chunks, chunk, ';')) {
        std::stringstream toks(chunk);
        std::string head;
        if (!(toks >> head)) continue;
        if (head == "v") {
            std::string lab;
            while (toks >> lab) pd.vertex_labels.push_back(lab);
        } else if (head == "e") {
            std::string pos, lab;
            if (!(toks >> pos >> lab)) throw ParseError("malformed edge in: " + s);
            size_t dash = pos.find('-');
            if (dash == std::string::npos) throw ParseError("malformed edge position: " + pos);
            int i = static_cast<int>(parse_int(pos.substr(0, dash), "edge endpoint"));
            int j = static_cast<int>(parse_int(pos.substr(dash + 1), "edge endpoint"));
            if (i < 1 || j <= i || j > theta)
                throw ParseError("edge endpoints out of order in: " + s);
            pd.edge_labels.emplace_back(i - 1, j - 1, lab);
        } else {
            throw ParseError("unknown diagram chunk '" + head + "' in: " + s);
        }
    }
    if (static_cast<int>(pd.vertex_labels.size()) != theta)
        throw ParseError("expected " + std::to_string(theta) + " vertex labels in: " + s);
    return pd;
}

NodeToken parse_node_token(const std::string& s) {
    NodeToken t;
    size_t colon = s.find(':');
    if (colon == std::string::npos) {
        t.k = static_cast<int>(parse_int(strip(s), "node token"));
    } else {
        t.tau = strip(s.substr(0, colon));
        t.k = static_cast<int>(parse_int(strip(s.substr(colon + 1)), "node token"));
    }
    return t;
}

} // namespace

std::vector<ParametricRow> load_rows(const std::string& path) {
    auto doc = read_toml(path);
    std::vector<ParametricRow> rows;
    for (const auto& [sec_name, sec] : doc) {
        if (sec_name.rfind("row.", 0) != 0)
            throw ParseError("unexpected section [" + sec_name + "] in " + path);
        ParametricRow row;
        row.row_id = sec_name.substr(4);
        row.theta = static_cast<int>(need_int(sec, "theta", sec_name));
        row.zeta_order = static_cast<int>(need_int(sec, "zeta_order", sec_name));
        row.char_excluded = static_cast<int>(need_int(sec, "char_excluded", sec_name));
        row.graph_nodes = static_cast<int>(need_int(sec, "graph_nodes", sec_name));
        if (row.zeta_order < 3 || row.zeta_order > 5)
            throw ParseError("zeta_order out of range in " + sec_name);
        for (const auto& s : need_arr(sec, "diagrams", sec_name))
            row.diagrams.push_back(parse_diagram_string(s, row.theta));
        if (row.diagrams.empty()) throw ParseError("no diagrams in " + sec_name);
        for (const auto& s : need_arr(sec, "node_tokens", sec_name)) {
            NodeToken t = parse_node_token(s);
            if (t.k < 1 || t.k > static_cast<int>(row.diagrams.size()))
                throw ParseError("node token index out of range in " + sec_name);
            row.node_tokens.push_back(std::move(t));
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const ParametricRow& a, const ParametricRow& b) {
        return std::stoi(a.row_id) < std::stoi(b.row_id);
    });
    return rows;
}

std::vector<RootList> load_root_lists(const std::string& path, const std::string& label_prefix) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture file: " + path);
    std::vector<RootList> lists;
    int theta = 0;
    std::string line;
    RootList* cur = nullptr;
    int declared = -1;
    int lineno = 0;
    auto finish = [&] {
        if (!cur) return;
        if (static_cast<int>(cur->roots.size()) != declared)
            throw ParseError(path + ": list " + cur->label + " has " +
                             std::to_string(cur->roots.size()) + " roots, header says " +
                             std::to_string(declared));
        cur = nullptr;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = strip(cut_comment(line));
        if (t.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        if (t.rfind("rank", 0) == 0) {
            theta = static_cast<int>(parse_int(strip(t.substr(4)), where));
            continue;
        }
        if (t.rfind("Nr.", 0) == 0) {
            finish();
            // "Nr. <n>, <count> positive roots:"
            size_t comma = t.find(',');
            size_t word = t.find("positive roots:");
            if (comma == std::string::npos || word == std::string::npos || theta == 0)
                throw ParseError("malformed list header at " + where);
            int nr = static_cast<int>(parse_int(strip(t.substr(3, comma - 3)), where));
            declared = static_cast<int>(parse_int(strip(t.substr(comma + 1, word - comma - 1)), where));
            lists.push_back(RootList{label_prefix + ".Nr" + std::to_string(nr), theta, {}});
            cur = &lists.back();
            continue;
        }
        if (!cur) throw ParseError("root tokens before any header at " + where);
        std::stringstream toks(t);
        std::string tok;
        while (std::getline(toks, tok, ',')) {
            tok = strip(tok);
            if (tok.empty()) continue;
            Root v = parse_root_notation(tok, theta);
            if (!root_positive(v)) throw ParseError("non-positive root at " + where);
            cur->roots.push_back(std::move(v));
        }
    }
    finish();
    if (lists.empty()) throw ParseError("no root lists in " + path);
    return lists;
}

FixtureSet load_fixtures(const std::string& dir) {
    FixtureSet fx;
    fx.rows = load_rows(dir + "/rows.toml");
    for (auto [file, prefix] : {std::pair{"appendix_a.txt", "A"}, {"appendix_b.txt", "B"},
                                {"appendix_c.txt", "C"}}) {
        auto lists = load_root_lists(dir + "/" + file, prefix);
        fx.lists.insert(fx.lists.end(), std::make_move_iterator(lists.begin()),
                        std::make_move_iterator(lists.end()));
    }
    return fx;
}

// ---------------------------------------------------------------------------
// verification harness

VerificationReport verify_row(const ParametricRow& row, const std::vector<RootList>& lists,
                              const Budgets& budgets, int p_override) {
    VerificationReport rep;
    rep.row_id = row.row_id;
    rep.theta = row.theta;
    Instantiation inst = default_instantiation(row);
    if (p_override != 0) inst.p = p_override;
    rep.N = inst.N;
    rep.p = inst.p;
    rep.zeta_exp = inst.zeta_exp;

    std::vector<GDDiagram> diags;
    try {
        diags = instantiate_row(row, inst.p, inst.zeta_exp, inst.N);
    } catch (const Error& e) {
        rep.failures.push_back(e.code() + ": " + e.what());
        return rep;
    }

    std::optional<CartanGraph> G;
    try {
        G = build_graph(diags.front(), budgets.max_points);
        rep.graph_finite = true;
    } catch (const Error& e) {
        rep.failures.push_back("(i) " + e.code() + ": " + e.what());
        return rep;
    }
    rep.points = G->size();

    // (ii) iso classes of point diagrams == the row's diagram list
    {
        std::set<size_t> hit;
        bool every_point_matched = true;
        for (const Point& P : G->points()) {
            bool matched = false;
            for (size_t k = 0; k < diags.size(); ++k)
                if (diagram_iso(P.diagram, diags[k])) {
                    hit.insert(k);
                    matched = true;
                    break;
                }
            if (!matched) every_point_matched = false;
        }
        rep.diagrams_match = every_point_matched && hit.size() == diags.size();
        if (!rep.diagrams_match)
            rep.failures.push_back("(ii) point diagrams and fixture diagrams differ up to iso");
    }

    std::optional<RootSystemData> R;
    try {
        R = enumerate_roots(*G, budgets.max_roots);
    } catch (const Error& e) {
        rep.failures.push_back("(iii) " + e.code() + ": " + e.what());
    }

    if (R) {
        rep.n_positive = static_cast<int>(R->positive[G->base()].size());

        // (iii)+(iv) exactly one list matches, at some point, as a multiset
        // up to a simple-root permutation
        std::set<std::string> matched_labels;
        for (int x = 0; x < G->size(); ++x) {
            for (const RootList& lst : lists) {
                if (lst.theta != row.theta) continue;
                if (lst.roots.size() != R->positive[x].size()) continue;
                if (matched_labels.count(lst.label)) continue;
                auto sig = root_perm_match(R->positive[x], lst.roots);
                if (sig) {
                    matched_labels.insert(lst.label);
                    if (rep.appendix_label.empty()) {
                        rep.appendix_label = lst.label;
                        rep.appendix_point = x;
                        rep.appendix_perm = sig->vec();
                        rep.count_matches =
                            static_cast<int>(lst.roots.size()) == rep.n_positive;
                    }
                }
            }
        }
        rep.appendix_unique = matched_labels.size() == 1;
        if (!rep.appendix_unique)
            rep.failures.push_back("(iii) matched " + std::to_string(matched_labels.size()) +
                                   " root lists, expected exactly 1");
        if (!rep.count_matches)
            rep.failures.push_back("(iv) positive-root count does not match the list");

        rep.axioms = verify_axioms(*G, *R);
        rep.axioms_pass = rep.axioms.all();
        if (!rep.axioms_pass) rep.failures.push_back("(vii) axiom suite failed");
    }

    // (v) exchange-graph vertex count
    rep.exchange_vertices = exchange_graph(*G).vertices;
    rep.exchange_count_matches = rep.exchange_vertices == row.graph_nodes;
    if (!rep.exchange_count_matches)
        rep.failures.push_back("(v) exchange graph has " + std::to_string(rep.exchange_vertices) +
                               " vertices, fixture declares " + std::to_string(row.graph_nodes));

    // (vi) good neighborhood
    rep.witness = goodnei_exists(*G);
    rep.witness_found = rep.witness.has_value();
    if (!rep.witness_found) rep.failures.push_back("(vi) no good-neighborhood witness found");

    return rep;
}

AllReport verify_all(const FixtureSet& fx, const Budgets& budgets, int p_override) {
    AllReport all;
    std::set<std::string> matched;
    for (const ParametricRow& row : fx.rows)
        all.rows.push_back(verify_row(row, fx.lists, budgets, p_override));
    for (const auto& rep : all.rows)
        if (!rep.appendix_label.empty()) matched.insert(rep.appendix_label);

    all.counts_covered = true;
    for (const RootList& lst : fx.lists) {
        if (matched.count(lst.label)) all.matched_lists.push_back(lst.label);
        else all.unmatched_lists.push_back(lst.label);
        bool count_hit = false;
        for (const auto& rep : all.rows)
            if (rep.n_positive == static_cast<int>(lst.roots.size())) count_hit = true;
        if (!count_hit) all.counts_covered = false;
    }
    return all;
}

} // namespace nichols

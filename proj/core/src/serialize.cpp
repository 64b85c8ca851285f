#include "nichols/serialize.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nichols/classification.hpp"
#include "nichols/errors.hpp"

namespace nichols {

namespace {

using json = nlohmann::ordered_json;

GDDiagram diagram_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("diagram document must be a JSON object");
    for (const char* key : {"theta", "ambient", "vertices", "edges"})
        if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    if (!doc["ambient"].is_object() || !doc["ambient"].contains("N") ||
        !doc["ambient"].contains("p"))
        throw ParseError("ambient must be an object with keys N and p");

    Ambient amb = make_ambient(doc["ambient"]["N"].get<int>(), doc["ambient"]["p"].get<int>());
    int theta = doc["theta"].get<int>();
    if (theta < 1) throw ParseError("theta must be positive");

    if (!doc["vertices"].is_array() || static_cast<int>(doc["vertices"].size()) != theta)
        throw ParseError("vertices must be an array of length theta");
    std::vector<int> verts;
    for (const auto& v : doc["vertices"]) {
        long long e = v.get<long long>();
        verts.push_back(static_cast<int>(((e % amb.N) + amb.N) % amb.N));
    }

    std::vector<std::tuple<int, int, int>> edges;
    std::set<std::pair<int, int>> seen;
    if (!doc["edges"].is_array()) throw ParseError("edges must be an array");
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("exp"))
            throw ParseError("each edge needs keys i, j, exp");
        int i = e["i"].get<int>();
        int j = e["j"].get<int>();
        if (i < 1 || j <= i || j > theta)
            throw ParseError("edge endpoints must satisfy 1 <= i < j <= theta");
        if (!seen.insert({i, j}).second)
            throw ParseError("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
        long long x = e["exp"].get<long long>();
        edges.emplace_back(i - 1, j - 1, static_cast<int>(((x % amb.N) + amb.N) % amb.N));
    }
    return GDDiagram(amb, theta, verts, edges);
}

} // namespace

GDDiagram load_diagram_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return diagram_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram document: ") + e.what());
    }
}

GDDiagram load_diagram_json(const std::string& text) {
    std::istringstream in(text);
    return load_diagram_json(in);
}

std::string emit_diagram_json(const GDDiagram& D) {
    json doc;
    doc["theta"] = D.theta();
    doc["ambient"] = {{"N", D.ambient().N}, {"p", D.ambient().p}};
    json verts = json::array();
    for (int i = 0; i < D.theta(); ++i) verts.push_back(D.vertex_exp(i));
    doc["vertices"] = std::move(verts);
    json edges = json::array();
    for (int i = 0; i < D.theta(); ++i)
        for (int j = i + 1; j < D.theta(); ++j)
            if (D.has_edge(i, j))
                edges.push_back({{"i", i + 1}, {"j", j + 1}, {"exp", D.edge_exp(i, j)}});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string emit_cartan_text(const CartanMatrix& A) {
    std::string out;
    for (int i = 0; i < A.theta; ++i) {
        for (int j = 0; j < A.theta; ++j) {
            if (j) out += ' ';
            out += std::to_string(A.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string emit_roots_text(const std::vector<Root>& roots) {
    std::string out;
    for (const Root& v : roots) out += emit_root_notation(v) + "\n";
    return out;
}

std::string diagram_hash(const GDDiagram& D) {
    unsigned long long h = 1469598103934665603ull;
    auto mix = [&h](unsigned long long x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<unsigned long long>(D.ambient().N));
    mix(static_cast<unsigned long long>(D.ambient().p));
    mix(static_cast<unsigned long long>(D.theta()));
    for (int v : D.grid()) mix(static_cast<unsigned long long>(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string emit_exchange_dot(const CartanGraph& G, const ExchangeGraph& X) {
    std::string out = "graph exchange {\n";
    for (int x = 0; x < X.vertices; ++x)
        out += "  P" + std::to_string(x) + " [label=\"P" + std::to_string(x) + " " +
               diagram_hash(G.point(x).diagram) + "\"];\n";
    for (const auto& e : X.edges) {
        std::string labs;
        for (int l : e.labels) {
            if (!labs.empty()) labs += ',';
            labs += std::to_string(l + 1);
        }
        out += "  P" + std::to_string(e.a) + " -- P" + std::to_string(e.b) + " [label=\"" +
               labs + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string emit_exchange_text(const CartanGraph& G, const ExchangeGraph& X) {
    std::string out = "vertices: " + std::to_string(X.vertices) + "\n";
    for (int x = 0; x < X.vertices; ++x)
        out += "P" + std::to_string(x) + " " + diagram_hash(G.point(x).diagram) + "\n";
    for (const auto& e : X.edges) {
        std::string labs;
        for (int l : e.labels) {
            if (!labs.empty()) labs += ',';
            labs += std::to_string(l + 1);
        }
        out += "P" + std::to_string(e.a) + " -- P" + std::to_string(e.b) + " [" + labs + "]\n";
    }
    return out;
}

} // namespace nichols

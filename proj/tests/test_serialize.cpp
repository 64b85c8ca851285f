#include <doctest.h>

#include <fstream>
#include <sstream>

#include "nichols/serialize.hpp"
#include "testsupport.hpp"

using namespace nichols;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bundled diagram documents load") {
    for (const char* name : {"row11_base.json", "rank2.json", "step23.json"}) {
        std::string path = testsupport::fixture_dir() + "/diagrams/" + name;
        GDDiagram D = load_diagram_json(slurp(path));
        CHECK(D.theta() >= 2);
        CHECK(load_diagram_json(emit_diagram_json(D)) == D);
    }
    GDDiagram row11 = load_diagram_json(slurp(testsupport::fixture_dir() +
                                              "/diagrams/row11_base.json"));
    CHECK(row11 == testsupport::row_base("11"));
}

TEST_CASE("diagram json round-trips the whole corpus") {
    for (const char* id : {"11", "12", "13", "14", "15", "17", "18", "19", "21"}) {
        for (const GDDiagram& D : testsupport::row_diagrams(id)) {
            std::string text = emit_diagram_json(D);
            CHECK(load_diagram_json(text) == D);
            CHECK(emit_diagram_json(load_diagram_json(text)) == text); // stable bytes
        }
    }
}

TEST_CASE("diagram json validation") {
    auto doc = [](const std::string& edges) {
        return std::string("{\"theta\": 2, \"ambient\": {\"N\": 6, \"p\": 7}, ") +
               "\"vertices\": [2, 2], \"edges\": [" + edges + "]}";
    };
    CHECK(load_diagram_json(doc("{\"i\": 1, \"j\": 2, \"exp\": 4}")).has_edge(0, 1));
    // exponents may arrive unreduced
    CHECK(load_diagram_json(doc("{\"i\": 1, \"j\": 2, \"exp\": 10}")).edge_exp(0, 1) == 4);
    CHECK(load_diagram_json(doc("{\"i\": 1, \"j\": 2, \"exp\": -2}")).edge_exp(0, 1) == 4);

    CHECK_THROWS_AS(load_diagram_json("not json"), ParseError);
    CHECK_THROWS_AS(load_diagram_json("{}"), ParseError);
    CHECK_THROWS_AS(load_diagram_json(doc("{\"i\": 2, \"j\": 1, \"exp\": 4}")), ParseError);
    CHECK_THROWS_AS(load_diagram_json(doc("{\"i\": 1, \"j\": 1, \"exp\": 4}")), ParseError);
    CHECK_THROWS_AS(load_diagram_json(doc("{\"i\": 1, \"j\": 3, \"exp\": 4}")), ParseError);
    CHECK_THROWS_AS(
        load_diagram_json(doc("{\"i\": 1, \"j\": 2, \"exp\": 4}, {\"i\": 1, \"j\": 2, \"exp\": 1}")),
        ParseError); // duplicate edge
    // ambient validation applies on load
    CHECK_THROWS_AS(
        load_diagram_json("{\"theta\": 1, \"ambient\": {\"N\": 6, \"p\": 3}, "
                          "\"vertices\": [2], \"edges\": []}"),
        BadParameter);
}

TEST_CASE("cartan and root text forms") {
    CHECK(emit_cartan_text(cartan_A(2)) == "2 -1\n-1 2\n");
    CHECK(emit_roots_text({Root{0, 1}, Root{1, 0}, Root{1, 1}, Root{5, 4}}) ==
          "2\n1\n12\n1^{5}2^{4}\n");
}

TEST_CASE("diagram hashes are stable and discriminating") {
    GDDiagram a = testsupport::row_base("11");
    GDDiagram b = testsupport::row_base("12");
    CHECK(diagram_hash(a).size() == 16);
    CHECK(diagram_hash(a) == diagram_hash(testsupport::row_base("11")));
    CHECK(diagram_hash(a) != diagram_hash(b));
}

TEST_CASE("exchange graph renderings") {
    CartanGraph G = build_graph(testsupport::row_base_at("11", 7));
    ExchangeGraph X = exchange_graph(G);
    std::string dot = emit_exchange_dot(G, X);
    CHECK(dot.find("graph exchange {") == 0);
    CHECK(dot.find("P0 [label=\"P0 ") != std::string::npos);
    CHECK(dot.find("P5") != std::string::npos);
    CHECK(dot.find("P0 -- P1 [label=\"3\"]") != std::string::npos);
    CHECK(dot.find("P2 -- P4 [label=\"1\"]") != std::string::npos);
    CHECK(dot == emit_exchange_dot(G, X)); // deterministic

    std::string text = emit_exchange_text(G, X);
    CHECK(text.find("vertices: 6") == 0);
    CHECK(text.find("P0 -- P1 [3]") != std::string::npos);
    CHECK(text.find("P1 -- P2 [2]") != std::string::npos);
    CHECK(text.find("P2 -- P4 [1]") != std::string::npos);
    CHECK(text.find("P3 -- P5 [5]") != std::string::npos);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "nichols/classification.hpp"
#include "testsupport.hpp"

using namespace nichols;

TEST_CASE("parse_label") {
    CHECK(parse_label("1", 6, 2) == 0);
    CHECK(parse_label("-1", 6, 2) == 3);
    CHECK(parse_label("z", 6, 2) == 2);
    CHECK(parse_label("-z", 6, 2) == 5);
    CHECK(parse_label("z^2", 6, 2) == 4);
    CHECK(parse_label("z^-1", 6, 2) == 4);
    CHECK(parse_label("z^{-1}", 6, 2) == 4);
    CHECK(parse_label("z^-2", 10, 2) == 6);
    CHECK(parse_label("-z^2", 10, 2) == 9);
    CHECK_THROWS_AS(parse_label("-1", 5, 1), BadParameter); // odd N, no -1
    CHECK_THROWS_AS(parse_label("w", 6, 2), ParseError);
    CHECK_THROWS_AS(parse_label("z^", 6, 2), ParseError);
    CHECK_THROWS_AS(parse_label("", 6, 2), ParseError);
}

TEST_CASE("root notation parses and emits") {
    CHECK(parse_root_notation("12", 5) == Root{1, 1, 0, 0, 0});
    CHECK(parse_root_notation("1^{2}234", 5) == Root{2, 1, 1, 1, 0});
    CHECK(parse_root_notation("1^{5}2^{4}3^{2}4^{3}5^{2}", 5) == Root{5, 4, 2, 3, 2});
    CHECK(parse_root_notation("7", 7) == Root{0, 0, 0, 0, 0, 0, 1});

    CHECK(emit_root_notation(Root{1, 1, 0, 0, 0}) == "12");
    CHECK(emit_root_notation(Root{2, 1, 1, 1, 0}) == "1^{2}234");
    CHECK(emit_root_notation(Root{5, 4, 2, 3, 2}) == "1^{5}2^{4}3^{2}4^{3}5^{2}");

    CHECK_THROWS_AS(parse_root_notation("", 5), ParseError);
    CHECK_THROWS_AS(parse_root_notation("0", 5), ParseError);   // indices are 1-based
    CHECK_THROWS_AS(parse_root_notation("6", 5), ParseError);   // out of range
    CHECK_THROWS_AS(parse_root_notation("1^{0}2", 5), ParseError);
    CHECK_THROWS_AS(parse_root_notation("1^{", 5), ParseError);
    CHECK_THROWS_AS(emit_root_notation(Root{0, 0}), BadParameter);
    CHECK_THROWS_AS(emit_root_notation(Root{1, -1}), BadParameter);

    // every root in the corpus round-trips
    for (const auto& list : testsupport::fixtures().lists)
        for (const Root& v : list.roots)
            CHECK(parse_root_notation(emit_root_notation(v), list.theta) == v);
}

TEST_CASE("fixture corpus shape") {
    const FixtureSet& fx = testsupport::fixtures();
    REQUIRE(fx.rows.size() == 9);
    struct Want {
        const char* id;
        int theta;
        int zeta_order;
        int excluded;
        int nodes;
        size_t diagrams;
    };
    const Want wants[] = {
        {"11", 5, 3, 3, 6, 4},  {"12", 5, 3, 3, 15, 15}, {"13", 5, 3, 3, 21, 21},
        {"14", 5, 4, 2, 12, 6}, {"15", 5, 5, 5, 7, 7},   {"17", 6, 3, 3, 7, 7},
        {"18", 6, 3, 3, 21, 21}, {"19", 6, 4, 2, 14, 7}, {"21", 7, 3, 3, 8, 8},
    };
    for (size_t k = 0; k < fx.rows.size(); ++k) {
        const ParametricRow& r = fx.rows[k];
        CHECK(r.row_id == wants[k].id);
        CHECK(r.theta == wants[k].theta);
        CHECK(r.zeta_order == wants[k].zeta_order);
        CHECK(r.char_excluded == wants[k].excluded);
        CHECK(r.graph_nodes == wants[k].nodes);
        CHECK(r.diagrams.size() == wants[k].diagrams);
        for (const auto& t : r.node_tokens) {
            CHECK(t.k >= 1);
            CHECK(t.k <= static_cast<int>(r.diagrams.size()));
        }
    }

    REQUIRE(fx.lists.size() == 10);
    auto count_of = [&fx](const std::string& label) {
        for (const auto& l : fx.lists)
            if (l.label == label) return l.roots.size();
        return size_t{0};
    };
    CHECK(count_of("A.Nr1") == 25);
    CHECK(count_of("A.Nr2") == 30);
    CHECK(count_of("A.Nr3") == 33);
    CHECK(count_of("A.Nr4") == 41);
    CHECK(count_of("A.Nr5") == 46);
    CHECK(count_of("A.Nr6") == 49);
    CHECK(count_of("B.Nr2") == 46);
    CHECK(count_of("B.Nr3") == 63);
    CHECK(count_of("B.Nr4") == 68);
    CHECK(count_of("C.Nr2") == 91);
    for (const auto& l : fx.lists) {
        std::set<Root> uniq(l.roots.begin(), l.roots.end());
        CHECK(uniq.size() == l.roots.size()); // appendix lists have no repeats
        for (const Root& v : l.roots) CHECK(root_positive(v));
    }
}

TEST_CASE("default instantiations") {
    struct Want {
        const char* id;
        int N, p, zexp;
    };
    const Want wants[] = {
        {"11", 6, 5, 2}, {"12", 6, 5, 2}, {"13", 6, 5, 2}, {"14", 4, 3, 1}, {"15", 10, 3, 2},
        {"17", 6, 5, 2}, {"18", 6, 5, 2}, {"19", 4, 3, 1}, {"21", 6, 5, 2},
    };
    for (const Want& w : wants) {
        Instantiation inst = default_instantiation(testsupport::row(w.id));
        CHECK(inst.N == w.N);
        CHECK(inst.p == w.p);
        CHECK(inst.zeta_exp == w.zexp);
    }
}

TEST_CASE("instantiation guards") {
    const ParametricRow& r11 = testsupport::row("11");
    CHECK_THROWS_AS(instantiate_row(r11, 3, 2, 6), BadParameter);  // excluded char
    CHECK_THROWS_AS(instantiate_row(r11, 2, 2, 6), BadParameter);  // gcd(6, 2) != 1
    CHECK_THROWS_AS(instantiate_row(r11, 6, 2, 6), BadParameter);  // not prime
    CHECK_THROWS_AS(instantiate_row(r11, 5, 1, 6), BadParameter);  // wrong zeta order
    CHECK_THROWS_AS(instantiate_row(r11, 5, 1, 3), BadParameter);  // odd N with -1 labels
    CHECK(instantiate_row(r11, 7, 2, 6).size() == 4);

    const ParametricRow& r19 = testsupport::row("19");
    CHECK_THROWS_AS(instantiate_row(r19, 2, 1, 4), BadParameter);  // excluded char
    CHECK(instantiate_row(r19, 3, 1, 4).size() == 7);
}

TEST_CASE("tau readings") {
    Ambient amb = make_ambient(12, 7);
    GDDiagram D(amb, 5, {1, 2, 3, 4, 5},
                {{0, 1, 7}, {1, 2, 8}, {2, 3, 9}, {3, 4, 10}});
    auto rs = tau_readings(D, "12435");
    REQUIRE(!rs.empty());
    CHECK(rs.size() <= 2);
    // both conventions swap the labels at positions 3 and 4 here
    for (const auto& R : rs) {
        CHECK(R.vertex_exp(2) == 4);
        CHECK(R.vertex_exp(3) == 3);
    }
    // identity subscript reads identically both ways
    auto rid = tau_readings(D, "12345");
    REQUIRE(rid.size() == 1);
    CHECK(rid[0] == D);
    CHECK_THROWS_AS(tau_readings(D, "1243"), ParseError);
    CHECK_THROWS_AS(tau_readings(D, "12433"), BadParameter); // not a bijection
    CHECK_THROWS_AS(tau_readings(D, "1243x"), ParseError);
}

TEST_CASE("root_perm_match") {
    std::vector<Root> base{{1, 0}, {0, 1}, {2, 1}};
    auto id = root_perm_match(base, base);
    REQUIRE(id);
    CHECK(*id == Permutation::identity(2));

    // swap the two columns: v o sigma with sigma = (1 0)
    std::vector<Root> swapped{{0, 1}, {1, 0}, {1, 2}};
    auto sw = root_perm_match(base, swapped);
    REQUIRE(sw);
    CHECK(*sw == Permutation({1, 0}));

    std::vector<Root> other{{1, 0}, {0, 1}, {2, 2}};
    CHECK_FALSE(root_perm_match(base, other));
    CHECK_FALSE(root_perm_match(base, std::vector<Root>{{1, 0}, {0, 1}}));
}

TEST_CASE("verify_row pinned reports") {
    const FixtureSet& fx = testsupport::fixtures();
    SUBCASE("row 11") {
        auto rep = verify_row(testsupport::row("11"), fx.lists);
        CHECK(rep.pass());
        CHECK(rep.N == 6);
        CHECK(rep.p == 5);
        CHECK(rep.points == 6);
        CHECK(rep.exchange_vertices == 6);
        CHECK(rep.n_positive == 25);
        CHECK(rep.appendix_label == "A.Nr1");
        CHECK(rep.appendix_point == 1);
        REQUIRE(rep.witness);
        CHECK(rep.witness->first == 0);
        CHECK(rep.witness->second.params == std::vector<int>{1, 1, 0, 0, 1});
        CHECK(rep.failures.empty());
    }
    SUBCASE("row 21") {
        auto rep = verify_row(testsupport::row("21"), fx.lists);
        CHECK(rep.pass());
        CHECK(rep.points == 8);
        CHECK(rep.n_positive == 91);
        CHECK(rep.appendix_label == "C.Nr2");
        CHECK(rep.appendix_point == 1);
        REQUIRE(rep.witness);
        CHECK(rep.witness->second.variant == NeighborhoodVariant::A7);
    }
    SUBCASE("row 18 under a point budget too small for its graph") {
        auto rep = verify_row(testsupport::row("18"), fx.lists, Budgets{5, 10000});
        CHECK_FALSE(rep.pass());
        CHECK_FALSE(rep.graph_finite);
        CHECK_FALSE(rep.failures.empty());
    }
}

TEST_CASE("a damaged reference list breaks the match checks") {
    const FixtureSet& fx = testsupport::fixtures();
    std::vector<RootList> lists = fx.lists;
    for (auto& l : lists)
        if (l.label == "A.Nr1") l.roots.pop_back();
    auto rep = verify_row(testsupport::row("11"), lists);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.appendix_unique);
    CHECK_FALSE(rep.count_matches);
    CHECK(rep.appendix_label.empty());
    // the graph side is untouched
    CHECK(rep.graph_finite);
    CHECK(rep.exchange_count_matches);
    CHECK(rep.witness_found);
    CHECK(rep.axioms_pass);
}

TEST_CASE("characteristic changes nothing but the recorded prime for row 11") {
    const FixtureSet& fx = testsupport::fixtures();
    auto a = verify_row(testsupport::row("11"), fx.lists, Budgets{}, 7);
    auto b = verify_row(testsupport::row("11"), fx.lists, Budgets{}, 13);
    CHECK(a.pass());
    CHECK(b.pass());
    CHECK(a.p == 7);
    CHECK(b.p == 13);
    CHECK(a.N == b.N);
    CHECK(a.zeta_exp == b.zeta_exp);
    CHECK(a.points == b.points);
    CHECK(a.exchange_vertices == b.exchange_vertices);
    CHECK(a.n_positive == b.n_positive);
    CHECK(a.appendix_label == b.appendix_label);
    CHECK(a.appendix_point == b.appendix_point);
    CHECK(a.appendix_perm == b.appendix_perm);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->first == b.witness->first);
    CHECK(a.witness->second.variant == b.witness->second.variant);
    CHECK(a.witness->second.sigma == b.witness->second.sigma);
    CHECK(a.witness->second.params == b.witness->second.params);
}

TEST_CASE("verify_all covers the corpus") {
    const FixtureSet& fx = testsupport::fixtures();
    AllReport all = verify_all(fx);
    CHECK(all.pass());
    REQUIRE(all.rows.size() == 9);
    for (const auto& rep : all.rows) {
        CAPTURE(rep.row_id);
        CHECK(rep.pass());
    }
    CHECK(all.matched_lists.size() == 9);
    CHECK(all.unmatched_lists == std::vector<std::string>{"A.Nr5"});
    CHECK(all.counts_covered);

    // the pinned per-row positive-root counts
    auto count_for = [&all](const std::string& id) {
        for (const auto& r : all.rows)
            if (r.row_id == id) return r.n_positive;
        return -1;
    };
    CHECK(count_for("11") == 25);
    CHECK(count_for("12") == 33);
    CHECK(count_for("13") == 49);
    CHECK(count_for("14") == 30);
    CHECK(count_for("15") == 41);
    CHECK(count_for("17") == 46);
    CHECK(count_for("18") == 68);
    CHECK(count_for("19") == 63);
    CHECK(count_for("21") == 91);
}

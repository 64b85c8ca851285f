#include <doctest.h>

#include <algorithm>
#include <random>

#include "nichols/neighborhoods.hpp"
#include "testsupport.hpp"

using namespace nichols;
using testsupport::neg_chain;
using testsupport::negative_family;

TEST_CASE("rank guards") {
    GDDiagram D2(make_ambient(6, 7), 2, {2, 2}, {{0, 1, 4}});
    CHECK_THROWS_AS(good_A5(D2), RankMismatch);
    CHECK_THROWS_AS(good_A6(D2), RankMismatch);
    CHECK_THROWS_AS(good_A7(D2), RankMismatch);
    CHECK_THROWS_AS(good_neighborhood(D2), RankMismatch);
    CartanGraph G2 = build_graph(D2);
    CHECK_THROWS_AS(goodnei_exists(G2), RankMismatch);
    CHECK_THROWS_AS(good_A5(G2, 0), RankMismatch);

    CartanGraph G5 = build_graph(testsupport::row_base("11"));
    CHECK_THROWS_AS(good_A5(G5, 99), BadParameter);
    CHECK_THROWS_AS(good_A5(G5, -1), BadParameter);
}

TEST_CASE("row 11 seed carries the pinned witness") {
    GDDiagram D = testsupport::row_base_at("11", 7);
    auto w = good_A5(D);
    REQUIRE(w);
    CHECK(w->variant == NeighborhoodVariant::A5a);
    CHECK(w->params == std::vector<int>{1, 1, 0, 0, 1});

    CartanGraph G = build_graph(D);
    auto hit = goodnei_exists(G);
    REQUIRE(hit);
    CHECK(hit->first == 0);
    CHECK(hit->second.variant == NeighborhoodVariant::A5a);
    CHECK(hit->second.params == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("every row instance has a witness at the pinned point") {
    struct Case {
        const char* id;
        int point;
        NeighborhoodVariant variant;
    };
    const Case cases[] = {
        {"11", 0, NeighborhoodVariant::A5a},  {"12", 1, NeighborhoodVariant::A5b},
        {"13", 2, NeighborhoodVariant::A5b},  {"14", 6, NeighborhoodVariant::A5c},
        {"15", 5, NeighborhoodVariant::A5b},  {"17", 0, NeighborhoodVariant::A6a},
        {"18", 16, NeighborhoodVariant::A6a}, {"19", 0, NeighborhoodVariant::A6b},
        {"21", 0, NeighborhoodVariant::A7},
    };
    for (const Case& c : cases) {
        CAPTURE(c.id);
        CartanGraph G = build_graph(testsupport::row_base(c.id));
        auto hit = goodnei_exists(G);
        REQUIRE(hit);
        CHECK(hit->first == c.point);
        CHECK(hit->second.variant == c.variant);
        if (G.theta() == 6) {
            int a = c.variant == NeighborhoodVariant::A6a ? 0 : 1;
            CHECK(hit->second.params == std::vector<int>{a});
        }
        if (G.theta() == 7) CHECK(hit->second.params.empty());
    }
}

TEST_CASE("witness can sit away from the base point") {
    CartanGraph G = build_graph(testsupport::row_base("12"));
    CHECK_FALSE(good_A5(G, G.base()));
    auto hit = goodnei_exists(G);
    REQUIRE(hit);
    CHECK(hit->first == 1);
}

TEST_CASE("row 17 witness has parameter a = 0 at p = 7") {
    CartanGraph G = build_graph(testsupport::row_base_at("17", 7));
    auto hit = goodnei_exists(G);
    REQUIRE(hit);
    CHECK(hit->second.variant == NeighborhoodVariant::A6a);
    CHECK(hit->second.params == std::vector<int>{0});
}

TEST_CASE("middle vertex of a witness diagram carries a -1 label") {
    // After the witness relabeling, rank-5 shapes force q_jj = -1 for some
    // j in {2,3,4}; rank 6 forces it at position 4, rank 7 at position 3.
    for (const char* id : {"11", "12", "13", "14", "15", "17", "18", "19", "21"}) {
        CAPTURE(id);
        CartanGraph G = build_graph(testsupport::row_base(id));
        auto hit = goodnei_exists(G);
        REQUIRE(hit);
        GDDiagram Y = apply_permutation(G.point(hit->first).diagram, hit->second.sigma);
        const int minus1 = Y.ambient().N / 2;
        if (G.theta() == 5) {
            CHECK((Y.vertex_exp(1) == minus1 || Y.vertex_exp(2) == minus1 ||
                   Y.vertex_exp(3) == minus1));
        } else if (G.theta() == 6) {
            CHECK(Y.vertex_exp(3) == minus1);
        } else {
            CHECK(Y.vertex_exp(2) == minus1);
        }
    }
}

TEST_CASE("detector is relabeling-equivariant") {
    std::mt19937_64 rng(61);
    CartanGraph G = build_graph(testsupport::row_base("11"));
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (int x = 0; x < G.size(); ++x) {
        const GDDiagram& X = G.point(x).diagram;
        auto wx = good_A5(X);
        for (int trial = 0; trial < 6; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Permutation rho(perm);
            GDDiagram Xr = apply_permutation(X, rho);
            auto wr = good_A5(Xr);
            CHECK(wx.has_value() == wr.has_value());
            if (wx) {
                // sigma o rho^-1 relabels Xr to the same diagram sigma
                // relabels X to, so it is a witness for Xr
                Permutation moved = wx->sigma.compose(rho.inverse());
                CHECK(apply_permutation(Xr, moved) == apply_permutation(X, wx->sigma));
            }
        }
    }
}

TEST_CASE("disconnected diagrams have no witness") {
    for (int rank : {5, 6, 7}) {
        std::vector<int> v(rank, 3);
        GDDiagram D(make_ambient(6, 7), rank, v, {});
        CHECK_FALSE(good_neighborhood(D));
    }
}

TEST_CASE("pinned impossible chains fail at the seed") {
    // all -1 vertices, one edge q of order 4, p = 7
    CHECK_FALSE(good_A5(neg_chain(negative_family("r5.b3"), 4, 7, 1)));
    // the rank-6 chain with edges (-1,-1,-1,q^-1,-1), q of order 4, p = 7
    CHECK_FALSE(good_A6(neg_chain(negative_family("r6.b1"), 4, 7, 1)));
    // the rank-7 chain with edges (q^-1, q, -1, -1, -1, -1), q of order 5, p = 7
    CHECK_FALSE(good_A7(neg_chain(negative_family("r7.a1"), 10, 7, 2)));
}

TEST_CASE("composite entries behind the rank-6 family are reachable") {
    // the chain itself has no 2-5 or 4-6 coupling; reflecting at the 4th
    // vertex (the one flanked by the order-4 edge) creates them, and the
    // resulting nonzero entries are what rule the family out.
    const auto& fam = negative_family("r6.b1");
    for (int p : {3, 7}) {
        GDDiagram D = neg_chain(fam, 4, p, 1);
        CHECK(cartan_entry(D, 1, 4) == 0);
        CHECK(reflect_diagram(D, 2) == D); // r_3 alone fixes the chain

        GDDiagram r4 = reflect_diagram(D, 3);    // r_4: new 3-5 edge
        CHECK(r4.has_edge(2, 4));
        CHECK(cartan_entry(r4, 2, 4) == -1);

        GDDiagram r3r4 = reflect_diagram(r4, 2); // r_3 r_4: new 2-5 edge
        CHECK(r3r4.has_edge(1, 4));
        CHECK(cartan_entry(r3r4, 1, 4) == -1);

        GDDiagram r5 = reflect_diagram(D, 4);    // r_5: new 4-6 edge
        CHECK(r5.has_edge(3, 5));
        CHECK(cartan_entry(r5, 3, 5) == -1);
    }
}

TEST_CASE("impossible chain families stay clean across a reflection ball") {
    for (const auto& fam : testsupport::negative_families()) {
        for (const auto& inst : fam.insts) {
            CAPTURE(fam.tag);
            CAPTURE(inst[0]);
            CAPTURE(inst[1]);
            GDDiagram D = neg_chain(fam, inst[0], inst[1], inst[2]);
            CHECK(testsupport::detector_hits(D, 40).empty());
        }
    }
}

#include <doctest.h>

#include <set>

#include "bowtie/closure.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/structure.hpp"
#include "fixtures.hpp"

using namespace bowtie;
using namespace bowtie::testing;

TEST_CASE("special_edges on single blocks") {
    CHECK(special_edges(chimney_graph(2)) == std::set<VertexPair>{{0, 1}});
    CHECK(special_edges(complete(4)).size() == 6);
    CHECK_THROWS_AS(special_edges(complete(3)), NotSpecialError);
    CHECK_THROWS_AS(special_edges(bowtie_graph()), ContainsBowtieError);
}

TEST_CASE("cross edges are never special") {
    auto se = special_edges(two_k4_cross());
    CHECK(se.size() == 12);
    CHECK(se.count({0, 4}) == 0);
}

TEST_CASE("special_edges are exactly K4 edges plus chimney bases") {
    for (std::size_t n = 4; n <= 9; ++n)
        for (const auto& g : enumerate_special(n)) {
            std::set<VertexPair> expected;
            for (const auto& b : decompose(g).blocks) {
                if (const auto* k4 = std::get_if<K4Block>(&b)) {
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            expected.insert(ordered(k4->vertices[i], k4->vertices[j]));
                } else {
                    expected.insert(std::get<Chimney>(b).base);
                }
            }
            CHECK(special_edges(g) == expected);
        }
}

TEST_CASE("acl singletons follow the role trichotomy") {
    Graph c = chimney_graph(3);
    CHECK(acl(c, {0}).closed == std::set<Vertex>{0, 1});        // base
    CHECK(acl(c, {2}).closed == std::set<Vertex>{0, 1, 2});     // tip
    Graph q = complete(4);
    CHECK(acl(q, {1}).closed == std::set<Vertex>{0, 1, 2, 3});  // K4
    CHECK(acl(q, {}).closed.empty());
}

TEST_CASE("acl provenance records the rules that fired") {
    auto r = acl(chimney_graph(2), {2});
    CHECK(r.input == std::set<Vertex>{2});
    REQUIRE(r.provenance.size() == r.closed.size());
    for (const auto& entry : r.provenance) {
        if (entry.vertex == 2) {
            CHECK(entry.in_input);
        } else {
            REQUIRE(entry.via_edge.has_value());
            CHECK(*entry.via_edge == VertexPair{0, 1});
            REQUIRE(entry.via_triangle.has_value());
        }
    }
}

TEST_CASE("acl singleton closures induce an edge, triangle, or K4") {
    for (std::size_t n = 4; n <= 8; ++n)
        for (const auto& g : enumerate_special(n))
            for (Vertex v : g.vertices()) {
                auto closed = acl(g, {v}).closed;
                Graph sub = g.induced(closed);
                switch (classify_vertex(g, v)) {
                    case VertexRole::InK4:
                        CHECK(closed.size() == 4);
                        CHECK(sub.edge_count() == 6);
                        break;
                    case VertexRole::Tip:
                        CHECK(closed.size() == 3);
                        CHECK(sub.edge_count() == 3);
                        break;
                    case VertexRole::Base:
                        CHECK(closed.size() == 2);
                        CHECK(sub.edge_count() == 1);
                        break;
                }
            }
}

TEST_CASE("acl is disintegrated, idempotent, monotone, and 4|A|-bounded") {
    for (std::size_t n = 4; n <= 8; ++n)
        for (const auto& g : enumerate_special(n)) {
            const auto& vs = g.vertices();
            std::vector<std::set<Vertex>> subsets{{}};
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i; j < vs.size(); ++j)
                    subsets.push_back({vs[i], vs[j]});
            for (const auto& a : subsets) {
                auto closed = acl(g, a).closed;
                CHECK(closed.size() <= 4 * a.size());
                CHECK(std::includes(closed.begin(), closed.end(), a.begin(), a.end()));
                CHECK(acl(g, closed).closed == closed);  // idempotent
                std::set<Vertex> pieces;
                for (Vertex v : a) {
                    auto single = acl(g, {v}).closed;
                    pieces.insert(single.begin(), single.end());
                    CHECK(std::includes(closed.begin(), closed.end(),
                                        single.begin(), single.end()));  // monotone
                }
                CHECK(pieces == closed);  // disintegrated
            }
        }
}

TEST_CASE("acl of a singleton is stable under growing the host graph") {
    // growing a chimney or adding disjoint blocks never changes acl({v})
    Graph small = chimney_graph(2);
    Graph tall = chimney_graph(5);
    for (Vertex v : small.vertices())
        CHECK(acl(small, {v}).closed == acl(tall, {v}).closed);

    std::vector<Vertex> vs = small.vertices();
    std::vector<VertexPair> es(small.edges().begin(), small.edges().end());
    Graph k4 = complete(4, 10);
    vs.insert(vs.end(), k4.vertices().begin(), k4.vertices().end());
    for (const auto& e : k4.edges()) es.push_back(e);
    Graph bigger(vs, es);
    for (Vertex v : small.vertices())
        CHECK(acl(bigger, {v}).closed == acl(small, {v}).closed);
}

TEST_CASE("closure serialization") {
    auto j = closure_to_json(acl(chimney_graph(2), {2}));
    CHECK(j.at("input") == std::vector<Vertex>{2});
    CHECK(j.at("closed") == (std::vector<Vertex>{0, 1, 2}));
    CHECK(j.at("provenance").size() == 3);
}

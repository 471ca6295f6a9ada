#include <doctest.h>

#include <random>

#include "kshare/graph.hpp"
#include "test_util.hpp"

using namespace kshare;

namespace {

KnowledgeBase abc_kb() {
    KnowledgeBase::Builder b;
    b.add(ActorId{"a"}, GeneratorId{"g1"});
    b.add(ActorId{"a"}, GeneratorId{"g2"});
    b.add(ActorId{"b"}, GeneratorId{"g2"});
    b.add(ActorId{"b"}, GeneratorId{"g3"});
    b.add(ActorId{"c"}, GeneratorId{"g4"});
    return b.build();
}

KnowledgeGraph triangle() {
    return KnowledgeGraph({{"a"}, {"b"}, {"c"}},
                          {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}}, WeightMode::Intersection, 0.0);
}

}  // namespace

TEST_CASE("build_graph on the shared-generator example") {
    auto kb = abc_kb();
    auto m = overlap_matrix(kb);
    auto g = build_graph(kb, m);
    CHECK(g.vertices() == std::vector<ActorId>{{"a"}, {"b"}, {"c"}});
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].a == 0);
    CHECK(g.edges()[0].b == 1);
    CHECK(g.edges()[0].weight == 1.0);

    SUBCASE("strict threshold removes the edge") {
        auto g1 = build_graph(kb, m, WeightMode::Intersection, 1.0);
        CHECK(g1.edges().empty());
        CHECK(g1.vertices().size() == 3);
    }
    SUBCASE("mismatched matrix is rejected") {
        KnowledgeBase::Builder other;
        other.add(ActorId{"x"}, GeneratorId{"g1"});
        CHECK_THROWS_WITH(build_graph(other.build(), m), "matrix does not match knowledge base");
    }
}

TEST_CASE("graph_stats") {
    SUBCASE("empty graph") {
        KnowledgeGraph g({}, {}, WeightMode::Intersection, 0.0);
        auto s = graph_stats(g);
        CHECK(s.order == 0);
        CHECK(s.size == 0);
        CHECK(s.component_count == 0);
    }
    SUBCASE("triangle") {
        auto s = graph_stats(triangle());
        CHECK(s.order == 3);
        CHECK(s.size == 3);
        CHECK(s.component_count == 1);
        CHECK(s.largest_component == 3);
        CHECK(s.degree_histogram.at(2) == 3);
    }
    SUBCASE("edge plus isolated vertex") {
        auto kb = abc_kb();
        auto s = graph_stats(build_graph(kb, overlap_matrix(kb)));
        CHECK(s.order == 3);
        CHECK(s.size == 1);
        CHECK(s.component_count == 2);
        CHECK(s.largest_component == 2);
        CHECK(s.degree_histogram.at(0) == 1);
        CHECK(s.degree_histogram.at(1) == 2);
    }
}

TEST_CASE("neighbors") {
    auto g = triangle();
    auto na = g.neighbors(ActorId{"a"});
    REQUIRE(na.size() == 2);
    CHECK(na[0] == std::pair<ActorId, double>{{"b"}, 1.0});
    CHECK(na[1] == std::pair<ActorId, double>{{"c"}, 2.0});

    KnowledgeGraph path({{"a"}, {"b"}, {"c"}}, {{0, 1, 1.0}, {1, 2, 1.0}},
                        WeightMode::Intersection, 0.0);
    auto nb = path.neighbors(ActorId{"b"});
    REQUIRE(nb.size() == 2);
    CHECK(nb[0].first == ActorId{"a"});
    CHECK(nb[1].first == ActorId{"c"});

    auto kb = abc_kb();
    auto g2 = build_graph(kb, overlap_matrix(kb));
    CHECK(g2.neighbors(ActorId{"c"}).empty());
    CHECK_THROWS_WITH(g2.neighbors(ActorId{"zz"}), "unknown vertex: zz");
}

TEST_CASE("constructor rejects malformed graphs") {
    CHECK_THROWS_WITH(KnowledgeGraph({{"a"}, {"b"}}, {{0, 0, 1.0}}, WeightMode::Intersection, 0.0),
                      "self-loop edge");
    CHECK_THROWS_WITH(
        KnowledgeGraph({{"a"}, {"b"}}, {{0, 1, 1.0}, {1, 0, 2.0}}, WeightMode::Intersection, 0.0),
        "duplicate edge");
    CHECK_THROWS(KnowledgeGraph({{"a"}, {"b"}}, {{0, 5, 1.0}}, WeightMode::Intersection, 0.0));
    CHECK_THROWS_WITH(KnowledgeGraph({{"a"}, {"b"}}, {{0, 1, 0.5}}, WeightMode::Intersection, 1.0),
                      "edge weight not above threshold");
}

TEST_CASE("property: graph fidelity against the oracle matrix") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 20; ++iter) {
        auto kb = testing::random_kb(rng, 30, 25, 8);
        auto oracle = brute_force_matrix(kb);
        auto g = build_graph(kb, overlap_matrix(kb));
        CHECK(g.vertices() == kb.actors());  // ξ injective, |V| = |A|
        REQUIRE(g.edges().size() == oracle.entry_count());
        for (std::size_t i = 0; i < oracle.entry_count(); ++i) {
            CHECK(g.edges()[i].a == oracle.entries()[i].a);
            CHECK(g.edges()[i].b == oracle.entries()[i].b);
            CHECK(g.edges()[i].weight == oracle.entries()[i].value);
        }
        // symmetry of adjacency
        for (const auto& e : g.edges()) {
            auto na = g.neighbors(g.vertex_at(e.a));
            auto nb = g.neighbors(g.vertex_at(e.b));
            CHECK(std::find(na.begin(), na.end(),
                            std::pair<ActorId, double>{g.vertex_at(e.b), e.weight}) != na.end());
            CHECK(std::find(nb.begin(), nb.end(),
                            std::pair<ActorId, double>{g.vertex_at(e.a), e.weight}) != nb.end());
        }
    }
}

TEST_CASE("property: thresholding monotonicity and normalized bound") {
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 20; ++iter) {
        auto kb = testing::random_kb(rng, 30, 20, 8);
        auto m = overlap_matrix(kb);
        std::size_t prev = build_graph(kb, m, WeightMode::Intersection, 0.0).edges().size();
        for (double t : {1.0, 2.0, 3.0}) {
            std::size_t now = build_graph(kb, m, WeightMode::Intersection, t).edges().size();
            CHECK(now <= prev);
            prev = now;
        }
        auto norm = build_graph(kb, m, WeightMode::Normalized, 0.0);
        for (const auto& e : norm.edges()) {
            CHECK(e.weight > 0.0);
            CHECK(e.weight <= 1.0);
            // recompute by hand from the oracle value
            double expected = brute_force_matrix(kb).value(norm.vertex_at(e.a), norm.vertex_at(e.b)) /
                              static_cast<double>(std::min(kb.sigma_size(norm.vertex_at(e.a)),
                                                           kb.sigma_size(norm.vertex_at(e.b))));
            CHECK(e.weight == expected);
        }
    }
}

TEST_CASE("union weight mode") {
    auto kb = abc_kb();
    auto g = build_graph(kb, overlap_matrix(kb), WeightMode::Union, 0.0);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].weight == 3.0);  // |{g1,g2} ∪ {g2,g3}|
}

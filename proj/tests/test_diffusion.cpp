#include <doctest.h>

#include <random>
#include <set>

#include "kshare/diffusion.hpp"
#include "kshare/io.hpp"

using namespace kshare;

namespace {

KnowledgeGraph path_abc() {
    return KnowledgeGraph({{"a"}, {"b"}, {"c"}}, {{0, 1, 1.0}, {1, 2, 1.0}},
                          WeightMode::Intersection, 0.0);
}

KnowledgeGraph pair_ab(double p) {
    return KnowledgeGraph({{"a"}, {"b"}}, {{0, 1, p}}, WeightMode::Normalized, 0.0);
}

SpreadConfig unit_si(std::vector<ActorId> seeds) {
    SpreadConfig cfg;
    cfg.seeds = std::move(seeds);
    return cfg;
}

}  // namespace

TEST_CASE("unit SI wavefront along a path") {
    auto trace = simulate(path_abc(), unit_si({{"a"}}));
    REQUIRE(trace.rounds.size() == 3);
    CHECK(trace.rounds[0] == std::vector<ActorId>{{"a"}});
    CHECK(trace.rounds[1] == std::vector<ActorId>{{"b"}});
    CHECK(trace.rounds[2] == std::vector<ActorId>{{"c"}});
    CHECK(trace.final_infected == std::vector<ActorId>{{"a"}, {"b"}, {"c"}});
}

TEST_CASE("seeding every vertex saturates in round zero") {
    auto trace = simulate(path_abc(), unit_si({{"a"}, {"b"}, {"c"}}));
    CHECK(trace.rounds.size() == 1);
    CHECK(trace.final_infected.size() == 3);
}

TEST_CASE("simulate validates its inputs") {
    auto g = path_abc();
    CHECK_THROWS_WITH(simulate(g, unit_si({{"zz"}})), "unknown seed actor: zz");
    CHECK_THROWS_WITH(simulate(g, unit_si({})), "empty seeds");
    KnowledgeGraph empty({}, {}, WeightMode::Intersection, 0.0);
    CHECK_THROWS_WITH(simulate(empty, unit_si({{"a"}})), "empty graph");

    SpreadConfig prop = unit_si({{"a"}});
    prop.transmission = Transmission::Proportional;
    CHECK_THROWS(simulate(g, prop));  // graph is not normalized-mode
}

TEST_CASE("max_rounds caps the spread") {
    auto cfg = unit_si({{"a"}});
    cfg.max_rounds = 1;
    auto trace = simulate(path_abc(), cfg);
    CHECK(trace.rounds.size() == 2);
    CHECK(trace.final_infected == std::vector<ActorId>{{"a"}, {"b"}});
}

TEST_CASE("determinism: identical config gives byte-identical traces") {
    SpreadConfig cfg = unit_si({{"a"}});
    cfg.transmission = Transmission::Scaled;
    cfg.lambda = 0.7;
    cfg.rng_seed = 99;
    auto g = path_abc();
    auto t1 = export_trace(simulate(g, cfg), TraceExportFormat::Json);
    auto t2 = export_trace(simulate(g, cfg), TraceExportFormat::Json);
    CHECK(t1 == t2);
}

TEST_CASE("rounds are disjoint and union to final_infected") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        // random graph on 12 vertices
        std::vector<ActorId> vertices;
        for (unsigned i = 0; i < 12; ++i) vertices.push_back(ActorId{"v" + std::to_string(i)});
        std::vector<KnowledgeGraph::Edge> edges;
        std::uniform_int_distribution<int> coin(0, 3);
        for (std::uint32_t i = 0; i < 12; ++i) {
            for (std::uint32_t j = i + 1; j < 12; ++j) {
                if (coin(rng) == 0) edges.push_back({i, j, 0.5});
            }
        }
        KnowledgeGraph g(vertices, edges, WeightMode::Normalized, 0.0);
        SpreadConfig cfg;
        cfg.model = iter % 2 ? SpreadModel::IC : SpreadModel::SI;
        cfg.transmission = Transmission::Proportional;
        cfg.seeds = {vertices[0]};
        cfg.rng_seed = iter;
        auto trace = simulate(g, cfg);
        std::set<ActorId> seen;
        for (const auto& round : trace.rounds) {
            for (const auto& v : round) CHECK(seen.insert(v).second);
        }
        CHECK(std::vector<ActorId>(seen.begin(), seen.end()) == trace.final_infected);
        // containment in the component of the seed
        for (const auto& v : trace.final_infected) CHECK(g.has_vertex(v));
    }
}

TEST_CASE("monte_carlo on unit transmission equals reachability") {
    auto kbless = KnowledgeGraph({{"a"}, {"b"}, {"c"}, {"d"}}, {{0, 1, 1.0}, {1, 2, 1.0}},
                                 WeightMode::Intersection, 0.0);
    auto est = monte_carlo(kbless, unit_si({{"a"}}), 25);
    CHECK(est.at(ActorId{"a"}) == 1.0);
    CHECK(est.at(ActorId{"b"}) == 1.0);
    CHECK(est.at(ActorId{"c"}) == 1.0);
    CHECK(est.at(ActorId{"d"}) == 0.0);
}

TEST_CASE("monte_carlo is independent of thread count") {
    SpreadConfig cfg;
    cfg.model = SpreadModel::IC;
    cfg.transmission = Transmission::Proportional;
    cfg.seeds = {{"a"}};
    cfg.rng_seed = 1234;
    auto g = pair_ab(0.5);
    auto e1 = monte_carlo(g, cfg, 1000, 1);
    auto e4 = monte_carlo(g, cfg, 1000, 4);
    CHECK(e1 == e4);
}

TEST_CASE("monte_carlo matches the Bernoulli probability on one edge") {
    SpreadConfig cfg;
    cfg.model = SpreadModel::IC;
    cfg.transmission = Transmission::Proportional;
    cfg.seeds = {{"a"}};
    cfg.rng_seed = 42;
    auto est = monte_carlo(pair_ab(0.5), cfg, 10000);
    CHECK(est.at(ActorId{"a"}) == 1.0);
    CHECK(est.at(ActorId{"b"}) == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("mix_seed decorrelates trials") {
    CHECK(mix_seed(0, 0) != mix_seed(0, 1));
    CHECK(mix_seed(0, 0) != mix_seed(1, 0));
    CHECK(mix_seed(7, 3) == mix_seed(7, 3));
}

TEST_CASE("adding a seed never shrinks the infected set (fixed rng)") {
    auto g = path_abc();
    SpreadConfig cfg;
    cfg.seeds = {{"a"}};
    cfg.transmission = Transmission::Scaled;
    cfg.lambda = 0.5;
    cfg.rng_seed = 3;
    auto base = monte_carlo(g, cfg, 200);
    SpreadConfig more = cfg;
    more.seeds = {{"a"}, {"c"}};
    auto extended = monte_carlo(g, more, 200);
    // seeds are always infected; with unit-probability comparison the set view:
    CHECK(extended.at(ActorId{"c"}) == 1.0);
    CHECK(extended.at(ActorId{"a"}) == 1.0);
}

TEST_CASE("trace_root ranks the plausible origins") {
    SUBCASE("unit transmission floods from any seed") {
        auto ranking = trace_root(path_abc(), {{"a"}, {"b"}, {"c"}}, unit_si({{"x"}}), 50);
        REQUIRE(ranking.size() == 3);
        for (const auto& [actor, score] : ranking) CHECK(score == 1.0);
        CHECK(ranking[0].first == ActorId{"a"});
        CHECK(ranking[1].first == ActorId{"b"});
        CHECK(ranking[2].first == ActorId{"c"});
    }
    SUBCASE("isolated observed vertex scores 1.0") {
        KnowledgeGraph g({{"a"}, {"b"}, {"v"}}, {{0, 1, 1.0}}, WeightMode::Intersection, 0.0);
        auto ranking = trace_root(g, {{"v"}}, unit_si({{"x"}}), 20);
        REQUIRE(ranking.size() == 1);
        CHECK(ranking[0].first == ActorId{"v"});
        CHECK(ranking[0].second == 1.0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_WITH(trace_root(path_abc(), {}, unit_si({{"x"}}), 10), "empty infected set");
        CHECK_THROWS_WITH(trace_root(path_abc(), {{"zz"}}, unit_si({{"x"}}), 10),
                          "unknown seed actor: zz");
    }
}

TEST_CASE("trace_root reproduces a high-trial brute-force ranking") {
    // path a-b-c-d-e with weights decreasing toward e
    KnowledgeGraph g({{"a"}, {"b"}, {"c"}, {"d"}, {"e"}},
                     {{0, 1, 0.9}, {1, 2, 0.7}, {2, 3, 0.4}, {3, 4, 0.2}},
                     WeightMode::Normalized, 0.0);
    SpreadConfig cfg;
    cfg.model = SpreadModel::IC;
    cfg.transmission = Transmission::Proportional;
    cfg.rng_seed = 77;
    std::vector<ActorId> infected{{"a"}, {"b"}, {"c"}};
    auto ranking = trace_root(g, infected, cfg, 4000);
    auto oracle = trace_root(g, infected, cfg, 100000);
    REQUIRE(ranking.size() == oracle.size());
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        CHECK(ranking[i].first == oracle[i].first);
    }
}

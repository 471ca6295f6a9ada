#pragma once
// Epidemic-style spread of a trait over the knowledge graph: round-based SI
// and independent-cascade models, Monte Carlo estimation, and root tracing.

#include <cstdint>
#include <map>
#include <vector>

#include "kshare/graph.hpp"

namespace kshare {

enum class SpreadModel {
    SI,  // infected vertices re-attempt every round
    IC,  // each edge gets at most one activation attempt ever
};

enum class Transmission {
    Unit,          // p = 1 on every edge
    Proportional,  // p = edge weight; requires a normalized-mode graph
    Scaled,        // p = 1 - exp(-lambda * weight)
};

struct SpreadConfig {
    SpreadModel model = SpreadModel::SI;
    std::vector<ActorId> seeds;
    unsigned max_rounds = 100;
    Transmission transmission = Transmission::Unit;
    double lambda = 1.0;
    std::uint64_t rng_seed = 0;
};

struct SpreadTrace {
    std::vector<std::vector<ActorId>> rounds;  // round 0 = seeds; each sorted
    std::vector<ActorId> final_infected;       // sorted union of rounds
    SpreadConfig config;
};

// splitmix64 of (master ^ golden-ratio mix of the trial index). The per-trial
// seed rule is part of the reproducibility contract: trial t of a run with
// master seed s always uses mix_seed(s, t), independent of execution order.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t trial);

// One deterministic run. Edges from infected to susceptible vertices are
// examined in lexicographic (source, target) order each round and one
// uniform draw is consumed per examined edge, fired iff draw < p.
SpreadTrace simulate(const KnowledgeGraph& g, const SpreadConfig& cfg);

// Per-actor infected fraction over independent trials; trial t uses rng seed
// mix_seed(cfg.rng_seed, t). Counts are integers, so the result does not
// depend on how trials are partitioned across threads.
std::map<ActorId, double> monte_carlo(const KnowledgeGraph& g, const SpreadConfig& cfg,
                                      unsigned trials, unsigned threads = 1);

// Ranks each infected actor as a candidate origin: seed it alone, estimate
// infection probabilities, take actors with estimate >= 0.5 as the expected
// infected set, and score by Jaccard similarity with the observation.
// Sorted by descending score, ties broken lexicographically.
std::vector<std::pair<ActorId, double>> trace_root(const KnowledgeGraph& g,
                                                   const std::vector<ActorId>& infected,
                                                   const SpreadConfig& cfg, unsigned trials);

}  // namespace kshare

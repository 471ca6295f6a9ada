#include "kshare/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace kshare {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t trial) {
    // splitmix64 finalizer over master + (trial+1) * golden gamma.
    std::uint64_t z = master + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

double uniform_draw(std::mt19937_64& rng) {
    // 53-bit mantissa mapping, stable across platforms.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double edge_probability(const KnowledgeGraph& g, const SpreadConfig& cfg, double weight) {
    switch (cfg.transmission) {
        case Transmission::Unit:
            return 1.0;
        case Transmission::Proportional:
            if (g.weight_mode() != WeightMode::Normalized) {
                throw std::invalid_argument(
                    "proportional transmission requires a normalized-mode graph");
            }
            return weight;
        case Transmission::Scaled:
            return 1.0 - std::exp(-cfg.lambda * weight);
    }
    return 0.0;
}

std::vector<std::uint32_t> seed_indices(const KnowledgeGraph& g, const SpreadConfig& cfg) {
    if (cfg.seeds.empty()) throw std::invalid_argument("empty seeds");
    if (g.vertices().empty()) throw std::invalid_argument("empty graph");
    if (cfg.max_rounds == 0) throw std::invalid_argument("max_rounds must be positive");
    std::vector<std::uint32_t> seeds;
    for (const auto& s : cfg.seeds) {
        if (!g.has_vertex(s)) throw std::invalid_argument("unknown seed actor: " + s.token);
        seeds.push_back(g.vertex_index(s));
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

// Index-level simulation; rounds come out sorted by vertex index, which is
// the lexicographic actor order.
std::vector<std::vector<std::uint32_t>> simulate_indices(const KnowledgeGraph& g,
                                                         const SpreadConfig& cfg) {
    const auto seeds = seed_indices(g, cfg);
    std::mt19937_64 rng(cfg.rng_seed);

    std::vector<bool> infected(g.vertices().size(), false);
    for (auto s : seeds) infected[s] = true;
    std::vector<std::vector<std::uint32_t>> rounds{seeds};
    std::unordered_set<std::uint64_t> attempted;  // IC only, packed (a<<32)|b

    auto edge_key = [](std::uint32_t u, std::uint32_t v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | v;
    };

    std::vector<std::uint32_t> frontier = seeds;  // all infected, kept sorted
    for (unsigned round = 0; round < cfg.max_rounds; ++round) {
        std::vector<std::uint32_t> newly;
        std::vector<bool> newly_mark(infected.size(), false);
        for (std::uint32_t u : frontier) {
            for (const auto& [v, w] : g.adjacency(u)) {
                if (infected[v]) continue;  // susceptibility is at round start
                if (cfg.model == SpreadModel::IC && !attempted.insert(edge_key(u, v)).second) {
                    continue;
                }
                double p = edge_probability(g, cfg, w);
                if (uniform_draw(rng) < p && !newly_mark[v]) {
                    newly_mark[v] = true;
                    newly.push_back(v);
                }
            }
        }
        if (newly.empty()) break;
        std::sort(newly.begin(), newly.end());
        for (auto v : newly) infected[v] = true;
        rounds.push_back(newly);
        std::vector<std::uint32_t> merged;
        std::merge(frontier.begin(), frontier.end(), newly.begin(), newly.end(),
                   std::back_inserter(merged));
        frontier = std::move(merged);
    }
    return rounds;
}

}  // namespace

SpreadTrace simulate(const KnowledgeGraph& g, const SpreadConfig& cfg) {
    SpreadTrace trace;
    trace.config = cfg;
    for (const auto& round : simulate_indices(g, cfg)) {
        std::vector<ActorId> ids;
        ids.reserve(round.size());
        for (auto v : round) ids.push_back(g.vertex_at(v));
        trace.final_infected.insert(trace.final_infected.end(), ids.begin(), ids.end());
        trace.rounds.push_back(std::move(ids));
    }
    std::sort(trace.final_infected.begin(), trace.final_infected.end());
    return trace;
}

std::map<ActorId, double> monte_carlo(const KnowledgeGraph& g, const SpreadConfig& cfg,
                                      unsigned trials, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    seed_indices(g, cfg);  // validate before spawning workers
    threads = std::max(1u, std::min(threads, trials));

    const std::size_t n = g.vertices().size();
    auto run_range = [&](unsigned begin, unsigned end, std::vector<std::uint64_t>& counts) {
        SpreadConfig trial_cfg = cfg;
        for (unsigned t = begin; t < end; ++t) {
            trial_cfg.rng_seed = mix_seed(cfg.rng_seed, t);
            for (const auto& round : simulate_indices(g, trial_cfg)) {
                for (auto v : round) ++counts[v];
            }
        }
    };

    std::vector<std::uint64_t> counts(n, 0);
    if (threads == 1) {
        run_range(0, trials, counts);
    } else {
        std::vector<std::vector<std::uint64_t>> partial(threads,
                                                        std::vector<std::uint64_t>(n, 0));
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            unsigned begin = static_cast<unsigned>(std::uint64_t(trials) * w / threads);
            unsigned end = static_cast<unsigned>(std::uint64_t(trials) * (w + 1) / threads);
            workers.emplace_back(run_range, begin, end, std::ref(partial[w]));
        }
        for (auto& t : workers) t.join();
        for (const auto& p : partial) {
            for (std::size_t i = 0; i < n; ++i) counts[i] += p[i];
        }
    }

    std::map<ActorId, double> estimates;
    for (std::size_t i = 0; i < n; ++i) {
        estimates.emplace(g.vertex_at(static_cast<std::uint32_t>(i)),
                          static_cast<double>(counts[i]) / static_cast<double>(trials));
    }
    return estimates;
}

std::vector<std::pair<ActorId, double>> trace_root(const KnowledgeGraph& g,
                                                   const std::vector<ActorId>& infected,
                                                   const SpreadConfig& cfg, unsigned trials) {
    if (infected.empty()) throw std::invalid_argument("empty infected set");
    std::vector<ActorId> observed = infected;
    std::sort(observed.begin(), observed.end());
    observed.erase(std::unique(observed.begin(), observed.end()), observed.end());
    for (const auto& v : observed) {
        if (!g.has_vertex(v)) throw std::invalid_argument("unknown seed actor: " + v.token);
    }

    std::vector<std::pair<ActorId, double>> ranking;
    for (const auto& candidate : observed) {
        SpreadConfig seeded = cfg;
        seeded.seeds = {candidate};
        auto estimates = monte_carlo(g, seeded, trials);
        std::vector<ActorId> expected;
        for (const auto& [actor, p] : estimates) {
            if (p >= 0.5) expected.push_back(actor);
        }
        std::vector<ActorId> inter, uni;
        std::set_intersection(expected.begin(), expected.end(), observed.begin(), observed.end(),
                              std::back_inserter(inter));
        std::set_union(expected.begin(), expected.end(), observed.begin(), observed.end(),
                       std::back_inserter(uni));
        double score = uni.empty() ? 0.0
                                   : static_cast<double>(inter.size()) / static_cast<double>(uni.size());
        ranking.emplace_back(candidate, score);
    }
    std::stable_sort(ranking.begin(), ranking.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    return ranking;
}

}  // namespace kshare

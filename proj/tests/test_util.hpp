#pragma once
// Shared generators for property-style tests.

#include <random>
#include <string>
#include <vector>

#include "kshare/core_model.hpp"

namespace kshare::testing {

inline std::string padded(const char* prefix, unsigned i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%s%04u", prefix, i);
    return buf;
}

// Random knowledge base: each actor holds a random subset of the universe
// with random weights in (0, 1].
inline KnowledgeBase random_kb(std::mt19937_64& rng, unsigned actors, unsigned universe_size,
                               unsigned max_gens_per_actor, bool unit_weights = false) {
    KnowledgeBase::Builder builder;
    std::uniform_int_distribution<unsigned> gen_count(0, max_gens_per_actor);
    std::uniform_int_distribution<unsigned> gen_pick(0, universe_size - 1);
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    for (unsigned a = 0; a < actors; ++a) {
        ActorId actor{padded("a", a)};
        builder.add_actor(actor);
        unsigned count = gen_count(rng);
        for (unsigned k = 0; k < count; ++k) {
            builder.add(actor, GeneratorId{padded("g", gen_pick(rng))},
                        unit_weights ? 1.0 : weight(rng));
        }
    }
    return builder.build();
}

inline std::vector<GeneratorId> random_sigma(std::mt19937_64& rng, unsigned universe_size,
                                             unsigned max_size) {
    std::uniform_int_distribution<unsigned> size(0, max_size);
    std::uniform_int_distribution<unsigned> pick(0, universe_size - 1);
    std::vector<GeneratorId> sigma;
    unsigned count = size(rng);
    for (unsigned k = 0; k < count; ++k) sigma.push_back(GeneratorId{padded("g", pick(rng))});
    return sigma;
}

}  // namespace kshare::testing

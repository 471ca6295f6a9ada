#pragma once
// Actors, generators, per-actor knowledge bases and the finite situation
// universe with its model-class operator.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace kshare {

// Opaque token: nonempty UTF-8, no newline, no comma.
bool is_valid_token(const std::string& token);

struct ActorId {
    std::string token;
    auto operator<=>(const ActorId&) const = default;
};

struct GeneratorId {
    std::string token;
    auto operator<=>(const GeneratorId&) const = default;
};

// An actor's knowledge: the generators it holds, each with a strength in
// (0, 1]. A generator with strength 0 is never stored; absence encodes zero.
// Immutable after build(); iteration order is lexicographic everywhere.
class KnowledgeBase {
public:
    using Sigma = std::map<GeneratorId, double>;

    class Builder {
    public:
        // Registers an actor even if it never receives a generator
        // (a degenerate actor becomes an isolated vertex downstream).
        Builder& add_actor(const ActorId& actor);

        // Adds one (actor, generator, weight) triple. Duplicate pairs keep
        // the maximum weight. Weight must lie in (0, 1].
        Builder& add(const ActorId& actor, const GeneratorId& gen, double weight = 1.0);

        KnowledgeBase build();

    private:
        std::map<ActorId, Sigma> sigma_;
    };

    const std::vector<ActorId>& actors() const { return actors_; }
    const std::vector<GeneratorId>& universe() const { return universe_; }

    bool has_actor(const ActorId& actor) const;
    const Sigma& sigma(const ActorId& actor) const;

    // Strength of a single generator; 0 for a generator the actor lacks.
    double f_single(const ActorId& actor, const GeneratorId& gen) const;

    // Joint strength of a set of generators: the minimum of the member
    // strengths. Duplicates are harmless; any absent member forces 0.
    double f_joint(const ActorId& actor, std::span<const GeneratorId> gens) const;

    std::size_t sigma_size(const ActorId& actor) const;

    // L(g) = f_single(g) / |Sigma|. Requires a nonempty knowledge base.
    double mass_probability(const ActorId& actor, const GeneratorId& gen) const;

    // Batch form of mass_probability over the actor's whole Sigma. When
    // normalized, values are rescaled to sum to 1.
    Sigma mass_distribution(const ActorId& actor, bool normalized = false) const;

private:
    friend class Builder;
    std::map<ActorId, Sigma> sigma_;
    std::vector<ActorId> actors_;
    std::vector<GeneratorId> universe_;
};

// A finite universe of situations with a satisfaction relation against
// generators. Anything not declared satisfied is unsatisfied.
class SituationUniverse {
public:
    class Builder {
    public:
        Builder& add_situation(const std::string& situation);
        Builder& set_satisfies(const std::string& situation, const GeneratorId& gen);
        SituationUniverse build();

    private:
        std::set<std::string> situations_;
        std::set<std::pair<std::string, GeneratorId>> satisfies_;
    };

    const std::vector<std::string>& situations() const { return situations_; }
    bool satisfies(const std::string& situation, const GeneratorId& gen) const;

private:
    std::vector<std::string> situations_;
    std::set<std::pair<std::string, GeneratorId>> satisfies_;
};

// The model class of a generator set: every situation consistent with all
// of its members. The empty set models every situation.
std::vector<std::string> mod_of(const SituationUniverse& universe,
                                std::span<const GeneratorId> sigma);

}  // namespace kshare

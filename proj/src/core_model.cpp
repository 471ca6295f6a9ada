#include "kshare/core_model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kshare {

bool is_valid_token(const std::string& token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (c == '\n' || c == '\r' || c == ',') return false;
    }
    return true;
}

namespace {

void require_token(const std::string& token, const char* what) {
    if (!is_valid_token(token)) {
        throw std::invalid_argument(std::string("invalid ") + what + " token: \"" + token + "\"");
    }
}

}  // namespace

KnowledgeBase::Builder& KnowledgeBase::Builder::add_actor(const ActorId& actor) {
    require_token(actor.token, "actor");
    sigma_.try_emplace(actor);
    return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::add(const ActorId& actor,
                                                    const GeneratorId& gen,
                                                    double weight) {
    require_token(actor.token, "actor");
    require_token(gen.token, "generator");
    if (!(weight > 0.0) || weight > 1.0) {
        throw std::invalid_argument("weight out of (0,1]: " + std::to_string(weight));
    }
    auto& sigma = sigma_[actor];
    auto [it, inserted] = sigma.try_emplace(gen, weight);
    if (!inserted) it->second = std::max(it->second, weight);
    return *this;
}

KnowledgeBase KnowledgeBase::Builder::build() {
    KnowledgeBase kb;
    std::set<GeneratorId> universe;
    for (const auto& [actor, sigma] : sigma_) {
        kb.actors_.push_back(actor);
        for (const auto& [gen, w] : sigma) universe.insert(gen);
    }
    kb.universe_.assign(universe.begin(), universe.end());
    kb.sigma_ = std::move(sigma_);
    return kb;
}

bool KnowledgeBase::has_actor(const ActorId& actor) const {
    return sigma_.contains(actor);
}

const KnowledgeBase::Sigma& KnowledgeBase::sigma(const ActorId& actor) const {
    auto it = sigma_.find(actor);
    if (it == sigma_.end()) throw std::invalid_argument("unknown actor id: " + actor.token);
    return it->second;
}

double KnowledgeBase::f_single(const ActorId& actor, const GeneratorId& gen) const {
    const auto& s = sigma(actor);
    auto it = s.find(gen);
    return it == s.end() ? 0.0 : it->second;
}

double KnowledgeBase::f_joint(const ActorId& actor, std::span<const GeneratorId> gens) const {
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    const auto& s = sigma(actor);
    double value = 1.0;
    for (const auto& g : gens) {
        auto it = s.find(g);
        if (it == s.end()) return 0.0;
        value = std::min(value, it->second);
    }
    return value;
}

std::size_t KnowledgeBase::sigma_size(const ActorId& actor) const {
    return sigma(actor).size();
}

double KnowledgeBase::mass_probability(const ActorId& actor, const GeneratorId& gen) const {
    const auto& s = sigma(actor);
    if (s.empty()) throw std::invalid_argument("empty knowledge base for actor: " + actor.token);
    auto it = s.find(gen);
    double f = it == s.end() ? 0.0 : it->second;
    return f / static_cast<double>(s.size());
}

KnowledgeBase::Sigma KnowledgeBase::mass_distribution(const ActorId& actor,
                                                      bool normalized) const {
    const auto& s = sigma(actor);
    if (s.empty()) throw std::invalid_argument("empty knowledge base for actor: " + actor.token);
    Sigma out;
    double total = 0.0;
    for (const auto& [gen, w] : s) {
        double l = w / static_cast<double>(s.size());
        out.emplace(gen, l);
        total += l;
    }
    if (normalized) {
        for (auto& [gen, l] : out) l /= total;
    }
    return out;
}

SituationUniverse::Builder& SituationUniverse::Builder::add_situation(const std::string& situation) {
    require_token(situation, "situation");
    situations_.insert(situation);
    return *this;
}

SituationUniverse::Builder& SituationUniverse::Builder::set_satisfies(const std::string& situation,
                                                                      const GeneratorId& gen) {
    add_situation(situation);
    require_token(gen.token, "generator");
    satisfies_.emplace(situation, gen);
    return *this;
}

SituationUniverse SituationUniverse::Builder::build() {
    SituationUniverse u;
    u.situations_.assign(situations_.begin(), situations_.end());
    u.satisfies_ = std::move(satisfies_);
    return u;
}

bool SituationUniverse::satisfies(const std::string& situation, const GeneratorId& gen) const {
    return satisfies_.contains({situation, gen});
}

std::vector<std::string> mod_of(const SituationUniverse& universe,
                                std::span<const GeneratorId> sigma) {
    std::vector<std::string> models;
    for (const auto& m : universe.situations()) {
        bool ok = true;
        for (const auto& g : sigma) {
            if (!universe.satisfies(m, g)) { ok = false; break; }
        }
        if (ok) models.push_back(m);
    }
    return models;
}

}  // namespace kshare

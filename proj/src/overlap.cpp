#include "kshare/overlap.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <type_traits>

namespace kshare {

OverlapMatrix::OverlapMatrix(std::vector<ActorId> actors, std::vector<Entry> entries,
                             OverlapMode mode)
    : actors_(std::move(actors)), entries_(std::move(entries)), mode_(mode) {}

double OverlapMatrix::value(const ActorId& a, const ActorId& b) const {
    auto find_index = [this](const ActorId& id) -> std::uint32_t {
        auto it = std::lower_bound(actors_.begin(), actors_.end(), id);
        if (it == actors_.end() || *it != id) {
            throw std::invalid_argument("unknown actor id: " + id.token);
        }
        return static_cast<std::uint32_t>(it - actors_.begin());
    };
    std::uint32_t i = find_index(a);
    std::uint32_t j = find_index(b);
    if (i == j) throw std::invalid_argument("diagonal overlap is implicit, not stored");
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(i, j),
                               [](const Entry& e, const std::pair<std::uint32_t, std::uint32_t>& key) {
                                   return std::make_pair(e.a, e.b) < key;
                               });
    if (it == entries_.end() || it->a != i || it->b != j) return 0.0;
    return it->value;
}

InvertedIndex InvertedIndex::build(const KnowledgeBase& kb) {
    InvertedIndex index;
    std::uint32_t i = 0;
    for (const auto& actor : kb.actors()) {
        for (const auto& [gen, w] : kb.sigma(actor)) {
            index.postings_[gen].emplace_back(i, w);
        }
        ++i;
    }
    return index;
}

double pairwise_overlap(const KnowledgeBase& kb, const ActorId& a, const ActorId& b,
                        OverlapMode mode) {
    const auto& sa = kb.sigma(a);
    const auto& sb = kb.sigma(b);
    const auto& small = sa.size() <= sb.size() ? sa : sb;
    const auto& large = sa.size() <= sb.size() ? sb : sa;
    double value = 0.0;
    for (const auto& [gen, w] : small) {
        auto it = large.find(gen);
        if (it == large.end()) continue;
        value += mode == OverlapMode::Count ? 1.0 : std::min(w, it->second);
    }
    return value;
}

namespace {

struct JoinPlan {
    // Postings flattened for cursor indexing; per-actor list of the posting
    // each of its generators lives in, together with the actor's own weight.
    // Count mode strips the weights so the hot loop streams plain indices.
    std::vector<InvertedIndex::Posting> postings;
    std::vector<std::vector<std::uint32_t>> posting_ids;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> actor_postings;
};

JoinPlan make_plan(const KnowledgeBase& kb, const InvertedIndex& index, OverlapMode mode) {
    JoinPlan plan;
    plan.actor_postings.resize(kb.actors().size());
    std::map<GeneratorId, std::uint32_t> posting_of;
    for (const auto& [gen, posting] : index.postings()) {
        posting_of.emplace(gen, static_cast<std::uint32_t>(posting_of.size()));
        if (mode == OverlapMode::Count) {
            std::vector<std::uint32_t> ids;
            ids.reserve(posting.size());
            for (const auto& [idx, w] : posting) ids.push_back(idx);
            plan.posting_ids.push_back(std::move(ids));
        } else {
            plan.postings.push_back(posting);
        }
    }
    std::uint32_t i = 0;
    for (const auto& actor : kb.actors()) {
        auto& mine = plan.actor_postings[i];
        for (const auto& [gen, w] : kb.sigma(actor)) {
            mine.emplace_back(posting_of.at(gen), w);
        }
        ++i;
    }
    return plan;
}

// Marks columns during a row accumulation and yields them back in ascending
// order without sorting: each level's words summarize the nonzero words of
// the level below, so a drain walks only occupied regions.
class TouchedBitset {
public:
    explicit TouchedBitset(std::size_t n) {
        std::size_t words = 0;
        do {
            words = (std::max<std::size_t>(n, 1) + 63) / 64;
            levels_.emplace_back(words, 0);
            n = words;
        } while (words > 1);
    }

    void set(std::size_t i) {
        for (auto& level : levels_) {
            std::uint64_t bit = 1ull << (i & 63);
            i >>= 6;
            if (level[i] & bit) break;
            level[i] |= bit;
        }
    }

    template <typename Visit>
    void drain(Visit&& visit) {
        drain_word(levels_.size() - 1, 0, visit);
    }

private:
    template <typename Visit>
    void drain_word(std::size_t level, std::size_t word, Visit& visit) {
        std::uint64_t w = levels_[level][word];
        levels_[level][word] = 0;
        while (w != 0) {
            std::size_t child = word * 64 + static_cast<std::size_t>(std::countr_zero(w));
            w &= w - 1;
            if (level == 0) {
                visit(child);
            } else {
                drain_word(level - 1, child, visit);
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> levels_;
};

// One sweep over all actors. Posting cursors advance monotonically with the
// row index, so each posting pair is visited exactly once and rows come out
// sorted by construction.
template <OverlapMode Mode>
std::vector<OverlapMatrix::Entry> join_entries(const JoinPlan& plan) {
    const std::size_t n = plan.actor_postings.size();
    const std::size_t posting_count =
        Mode == OverlapMode::Count ? plan.posting_ids.size() : plan.postings.size();

    // Entry count is bounded both by the posting pair incidences and by the
    // number of actor pairs; reserving the smaller bound keeps the sweep
    // reallocation-free even at ~1e8 entries.
    std::size_t incidences = 0;
    auto add_pairs = [&](std::size_t len) { incidences += len * (len - 1) / 2; };
    if constexpr (Mode == OverlapMode::Count) {
        for (const auto& p : plan.posting_ids) add_pairs(p.size());
    } else {
        for (const auto& p : plan.postings) add_pairs(p.size());
    }
    std::vector<OverlapMatrix::Entry> entries;
    entries.reserve(std::min(incidences, n * (n - 1) / 2));

    std::vector<std::size_t> cursor(posting_count, 0);
    using Acc = std::conditional_t<Mode == OverlapMode::Count, std::uint32_t, double>;
    std::vector<Acc> acc(n, Acc{});
    TouchedBitset touched(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (const auto& [pidx, wi] : plan.actor_postings[i]) {
            auto& c = cursor[pidx];
            if constexpr (Mode == OverlapMode::Count) {
                const auto& posting = plan.posting_ids[pidx];
                while (c < posting.size() && posting[c] <= i) ++c;
                for (std::size_t k = c; k < posting.size(); ++k) {
                    const std::uint32_t j = posting[k];
                    if (acc[j] == 0) touched.set(j);
                    acc[j] += 1;
                }
            } else {
                const auto& posting = plan.postings[pidx];
                while (c < posting.size() && posting[c].first <= i) ++c;
                for (std::size_t k = c; k < posting.size(); ++k) {
                    const auto [j, wj] = posting[k];
                    if (acc[j] == 0.0) touched.set(j);
                    acc[j] += std::min(wi, wj);
                }
            }
        }
        touched.drain([&](std::size_t j) {
            entries.push_back({i, static_cast<std::uint32_t>(j), static_cast<double>(acc[j])});
            acc[j] = Acc{};
        });
    }
    return entries;
}

}  // namespace

OverlapMatrix overlap_matrix(const KnowledgeBase& kb, OverlapMode mode) {
    const auto index = InvertedIndex::build(kb);
    const auto plan = make_plan(kb, index, mode);
    auto entries = mode == OverlapMode::Count ? join_entries<OverlapMode::Count>(plan)
                                              : join_entries<OverlapMode::WeightedMin>(plan);
    return OverlapMatrix(kb.actors(), std::move(entries), mode);
}

OverlapMatrix brute_force_matrix(const KnowledgeBase& kb, OverlapMode mode) {
    const auto& actors = kb.actors();
    if (actors.size() > 1000) throw std::invalid_argument("oracle limit exceeded");
    std::vector<OverlapMatrix::Entry> entries;
    for (std::uint32_t i = 0; i < actors.size(); ++i) {
        for (std::uint32_t j = i + 1; j < actors.size(); ++j) {
            double v = pairwise_overlap(kb, actors[i], actors[j], mode);
            if (v > 0.0) entries.push_back({i, j, v});
        }
    }
    return OverlapMatrix(actors, std::move(entries), mode);
}

}  // namespace kshare

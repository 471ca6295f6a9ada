#pragma once
// All-pairs shared-knowledge measures via an inverted index, plus a
// brute-force oracle for verification.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kshare/core_model.hpp"

namespace kshare {

enum class OverlapMode {
    Count,        // |Sigma_a ∩ Sigma_b|
    WeightedMin,  // sum over shared g of min(f_a(g), f_b(g))
};

// Sparse symmetric matrix of pairwise overlaps. Only strictly positive
// values are stored, once per unordered pair with the lexicographically
// smaller actor first. The diagonal is defined (|Sigma_a| in count mode)
// but never materialized.
class OverlapMatrix {
public:
    struct Entry {
        std::uint32_t a;  // index into actors(), a < b
        std::uint32_t b;
        double value;
    };

    OverlapMatrix(std::vector<ActorId> actors, std::vector<Entry> entries, OverlapMode mode);

    const std::vector<ActorId>& actors() const { return actors_; }
    OverlapMode mode() const { return mode_; }
    std::span<const Entry> entries() const { return entries_; }
    std::size_t entry_count() const { return entries_.size(); }

    // Off-diagonal lookup; 0 if the pair is not stored. Diagonal queries
    // are the caller's business (overlap(a,a) = |Sigma_a|, not stored).
    double value(const ActorId& a, const ActorId& b) const;

    const ActorId& actor_at(std::uint32_t index) const { return actors_[index]; }

private:
    std::vector<ActorId> actors_;      // sorted
    std::vector<Entry> entries_;       // sorted by (a, b)
    OverlapMode mode_;
};

// Generator -> sorted list of (actor index, weight) postings. Actor indices
// refer to the knowledge base's sorted actor order.
class InvertedIndex {
public:
    using Posting = std::vector<std::pair<std::uint32_t, double>>;

    static InvertedIndex build(const KnowledgeBase& kb);

    const std::map<GeneratorId, Posting>& postings() const { return postings_; }

private:
    std::map<GeneratorId, Posting> postings_;
};

// Overlap of one pair, computed directly from the two Sigma maps.
double pairwise_overlap(const KnowledgeBase& kb, const ActorId& a, const ActorId& b,
                        OverlapMode mode = OverlapMode::Count);

// Full sparse matrix via per-posting-list pair accumulation. Never touches
// non-overlapping pairs; memory is proportional to the nonzero entries.
OverlapMatrix overlap_matrix(const KnowledgeBase& kb, OverlapMode mode = OverlapMode::Count);

// Nested-loop reference for overlap_matrix. Refuses more than 1000 actors.
OverlapMatrix brute_force_matrix(const KnowledgeBase& kb, OverlapMode mode = OverlapMode::Count);

}  // namespace kshare

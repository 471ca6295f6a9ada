#pragma once
// The actor graph: vertices are actors, edges carry positive shared-knowledge
// weight above a threshold.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kshare/core_model.hpp"
#include "kshare/overlap.hpp"

namespace kshare {

enum class WeightMode {
    Intersection,  // edge weight = overlap value
    Union,         // |Sigma_a| + |Sigma_b| - overlap (count semantics)
    Normalized,    // overlap / min(|Sigma_a|, |Sigma_b|), always in (0, 1]
};

class KnowledgeGraph {
public:
    struct Edge {
        std::uint32_t a;  // index into vertices(), a < b
        std::uint32_t b;
        double weight;
    };

    // Direct construction, e.g. when loading a serialized graph. Vertices
    // are sorted and deduplicated; edges must reference known vertices.
    KnowledgeGraph(std::vector<ActorId> vertices, std::vector<Edge> edges,
                   WeightMode weight_mode, double threshold);

    const std::vector<ActorId>& vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    WeightMode weight_mode() const { return weight_mode_; }
    double threshold() const { return threshold_; }

    const ActorId& vertex_at(std::uint32_t index) const { return vertices_[index]; }
    bool has_vertex(const ActorId& v) const;
    std::uint32_t vertex_index(const ActorId& v) const;  // throws on unknown vertex

    // Adjacency of one vertex index, sorted by neighbor index.
    std::span<const std::pair<std::uint32_t, double>> adjacency(std::uint32_t index) const {
        return adjacency_[index];
    }

    // Lexicographically ordered (neighbor, weight) list.
    std::vector<std::pair<ActorId, double>> neighbors(const ActorId& v) const;

private:
    std::vector<ActorId> vertices_;
    std::vector<Edge> edges_;  // sorted by (a, b)
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency_;
    WeightMode weight_mode_;
    double threshold_;
};

struct GraphStats {
    std::size_t order = 0;
    std::size_t size = 0;
    std::map<std::size_t, std::size_t> degree_histogram;  // degree -> vertex count
    std::size_t component_count = 0;
    std::size_t largest_component = 0;
};

// Projects the overlap matrix onto a graph over all actors of kb. An edge
// exists iff its weight under the selected mode is strictly greater than
// the threshold. The matrix must have been computed from the same kb.
KnowledgeGraph build_graph(const KnowledgeBase& kb, const OverlapMatrix& matrix,
                           WeightMode weight_mode = WeightMode::Intersection,
                           double threshold = 0.0);

GraphStats graph_stats(const KnowledgeGraph& g);

}  // namespace kshare

#include "kshare/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kshare {

KnowledgeGraph::KnowledgeGraph(std::vector<ActorId> vertices, std::vector<Edge> edges,
                               WeightMode weight_mode, double threshold)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      weight_mode_(weight_mode),
      threshold_(threshold) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (auto& e : edges_) {
        if (e.a == e.b) throw std::invalid_argument("self-loop edge");
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.b >= vertices_.size()) throw std::invalid_argument("edge references unknown vertex");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
        return x.a == y.a && x.b == y.b;
    });
    if (dup != edges_.end()) throw std::invalid_argument("duplicate edge");
    for (const auto& e : edges_) {
        if (!(e.weight > threshold_)) {
            throw std::invalid_argument("edge weight not above threshold");
        }
    }
    adjacency_.resize(vertices_.size());
    for (const auto& e : edges_) {
        adjacency_[e.a].emplace_back(e.b, e.weight);
        adjacency_[e.b].emplace_back(e.a, e.weight);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool KnowledgeGraph::has_vertex(const ActorId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::uint32_t KnowledgeGraph::vertex_index(const ActorId& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        throw std::invalid_argument("unknown vertex: " + v.token);
    }
    return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::vector<std::pair<ActorId, double>> KnowledgeGraph::neighbors(const ActorId& v) const {
    std::vector<std::pair<ActorId, double>> out;
    for (const auto& [j, w] : adjacency_[vertex_index(v)]) {
        out.emplace_back(vertices_[j], w);
    }
    return out;
}

KnowledgeGraph build_graph(const KnowledgeBase& kb, const OverlapMatrix& matrix,
                           WeightMode weight_mode, double threshold) {
    if (matrix.actors() != kb.actors()) {
        throw std::invalid_argument("matrix does not match knowledge base");
    }
    const auto& actors = kb.actors();
    std::vector<std::size_t> sizes(actors.size());
    for (std::size_t i = 0; i < actors.size(); ++i) sizes[i] = kb.sigma_size(actors[i]);

    std::vector<KnowledgeGraph::Edge> edges;
    for (const auto& entry : matrix.entries()) {
        double w = entry.value;
        switch (weight_mode) {
            case WeightMode::Intersection:
                break;
            case WeightMode::Union:
                w = static_cast<double>(sizes[entry.a] + sizes[entry.b]) - entry.value;
                break;
            case WeightMode::Normalized:
                w = entry.value / static_cast<double>(std::min(sizes[entry.a], sizes[entry.b]));
                break;
        }
        if (w > threshold) edges.push_back({entry.a, entry.b, w});
    }
    return KnowledgeGraph(actors, std::move(edges), weight_mode, threshold);
}

GraphStats graph_stats(const KnowledgeGraph& g) {
    GraphStats stats;
    stats.order = g.vertices().size();
    stats.size = g.edges().size();
    for (std::uint32_t i = 0; i < stats.order; ++i) {
        ++stats.degree_histogram[g.adjacency(i).size()];
    }
    // Components by iterative DFS.
    std::vector<bool> seen(stats.order, false);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t start = 0; start < stats.order; ++start) {
        if (seen[start]) continue;
        ++stats.component_count;
        std::size_t size = 0;
        stack.push_back(start);
        seen[start] = true;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& [j, w] : g.adjacency(v)) {
                if (!seen[j]) {
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
        stats.largest_component = std::max(stats.largest_component, size);
    }
    return stats;
}

}  // namespace kshare

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sfcm {

/// Immutable undirected graph. Vertex ids are 0..n-1. Neighbor order is the
/// order edges appeared in the input; the solver treats that order as
/// significant, so it is preserved here and never normalized.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name = "");

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& name() const { return name_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Deduplicated edge list in first-seen order, u < v normalized per pair.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool connected() const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::string name_;
};

/// One connected component of H[active - vh], together with its |H^n| data:
/// hn_boundary is the set of vh vertices reachable through members having
/// exactly one vh neighbor, hn_value its size. hn_value = 0 flags a component
/// with no such attachment point (disconnected from vh in that sense).
struct ComponentInfo {
    std::vector<int> members;      // ascending
    std::vector<int> hn_boundary;  // ascending
    int hn_value = 0;              // == hn_boundary.size()
};

/// Cut vertices of the subgraph induced by the active mask, ascending.
/// Iterative lowpoint DFS; handles disconnected induced subgraphs.
std::vector<int> articulation_points(const Graph& g, const std::vector<char>& active);
std::vector<int> articulation_points(const Graph& g);

/// Partitions active \ vh into connected components of the induced subgraph
/// and computes each component's |H^n| boundary. vh must be a subset of
/// active. Components are ordered by their smallest member.
std::vector<ComponentInfo> components_minus_vh(const Graph& g,
                                               const std::vector<char>& active,
                                               const std::vector<char>& is_vh);

inline std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

inline std::pair<int, int> key_edge(std::uint64_t k) {
    return {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)};
}

}  // namespace sfcm

#include "sfcm/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfcm {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name)
    : adj_(n), name_(std::move(name)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        auto key = edge_key(u, v);
        if (!edge_keys_.insert(key).second) continue;  // duplicate
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return edge_keys_.count(edge_key(u, v)) != 0;
}

bool Graph::connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<int> articulation_points(const Graph& g, const std::vector<char>& active) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<char> is_cut(n, 0);
    int timer = 0;

    // Explicit stack of (vertex, neighbor index) to survive path-shaped inputs.
    struct Frame {
        int v;
        std::size_t i;
    };
    std::vector<Frame> stack;

    for (int root = 0; root < n; ++root) {
        if (!active[root] || disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            auto nbrs = g.neighbors(v);
            if (i < nbrs.size()) {
                int w = nbrs[i++];
                if (!active[w]) continue;
                if (disc[w] == -1) {
                    parent[w] = v;
                    ++child_count[v];
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (child_count[root] > 1) is_cut[root] = 1;
    }

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

std::vector<int> articulation_points(const Graph& g) {
    return articulation_points(g, std::vector<char>(g.vertex_count(), 1));
}

std::vector<ComponentInfo> components_minus_vh(const Graph& g,
                                               const std::vector<char>& active,
                                               const std::vector<char>& is_vh) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<ComponentInfo> out;
    std::vector<int> stack;

    for (int s = 0; s < n; ++s) {
        if (!active[s] || is_vh[s] || seen[s]) continue;
        ComponentInfo comp;
        stack.assign(1, s);
        seen[s] = 1;
        std::vector<char> in_boundary(n, 0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.members.push_back(v);
            int vh_nbr = -1, vh_nbrs = 0;
            for (int w : g.neighbors(v)) {
                if (!active[w]) continue;
                if (is_vh[w]) {
                    ++vh_nbrs;
                    vh_nbr = w;
                } else if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
            // Z-set rule: members with exactly one vh neighbor contribute it.
            if (vh_nbrs == 1 && !in_boundary[vh_nbr]) {
                in_boundary[vh_nbr] = 1;
                comp.hn_boundary.push_back(vh_nbr);
            }
        }
        std::sort(comp.members.begin(), comp.members.end());
        std::sort(comp.hn_boundary.begin(), comp.hn_boundary.end());
        comp.hn_value = static_cast<int>(comp.hn_boundary.size());
        out.push_back(std::move(comp));
    }

    std::sort(out.begin(), out.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
        return a.members.front() < b.members.front();
    });
    return out;
}

}  // namespace sfcm

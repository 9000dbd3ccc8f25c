#include "coco/netsim.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace coco {

std::vector<std::vector<int>> LinkGraph::adjacency() const {
    std::vector<std::vector<int>> adj(node_count);
    for (const Link& l : links) {
        adj[l.a].push_back(l.b);
        adj[l.b].push_back(l.a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

LinkGraph build_link_graph(const std::vector<Vec2>& positions, const ChannelParams& params,
                           Rng& rng) {
    if (positions.empty()) throw std::invalid_argument("build_link_graph: need at least one node");
    LinkGraph graph;
    graph.node_count = static_cast<int>(positions.size());
    for (int i = 0; i < graph.node_count; ++i) {
        for (int j = i + 1; j < graph.node_count; ++j) {
            const double rss = sample_rss(positions[i], positions[j], params, rng);
            if (link_up(rss, params)) graph.links.push_back({i, j, rss});
        }
    }
    return graph;
}

RoutingTables compute_routing_tables(const LinkGraph& graph) {
    const int n = graph.node_count;
    RoutingTables tables;
    tables.node_count = n;
    tables.hops.assign(n, std::vector<std::optional<int>>(n));
    tables.next_hop.assign(n, std::vector<std::optional<int>>(n));

    const auto adj = graph.adjacency();
    for (int src = 0; src < n; ++src) {
        auto& hops = tables.hops[src];
        auto& next = tables.next_hop[src];
        hops[src] = 0;
        std::queue<int> frontier;
        frontier.push(src);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int v : adj[u]) {
                if (hops[v].has_value()) continue;
                hops[v] = *hops[u] + 1;
                // First hop on the route: the neighbor itself for direct
                // links, otherwise inherited from the parent.
                next[v] = (u == src) ? v : *next[u];
                frontier.push(v);
            }
        }
    }
    return tables;
}

std::vector<int> k_hop_neighborhood(const RoutingTables& tables, int node, int k) {
    if (k < 1) throw std::invalid_argument("k_hop_neighborhood: k must be >= 1");
    std::vector<int> result;
    for (int j = 0; j < tables.node_count; ++j) {
        if (j == node) continue;
        const auto& h = tables.hops[node][j];
        if (h.has_value() && *h <= k) result.push_back(j);
    }
    return result;
}

std::vector<std::vector<int>> disk_neighborhood(const std::vector<Vec2>& positions,
                                                double radius_m) {
    if (!(radius_m > 0.0)) throw std::invalid_argument("disk_neighborhood: radius must be > 0");
    const int n = static_cast<int>(positions.size());
    std::vector<std::vector<int>> result(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (distance(positions[i], positions[j]) <= radius_m) {
                result[i].push_back(j);
                result[j].push_back(i);
            }
        }
    }
    for (auto& row : result) std::sort(row.begin(), row.end());
    return result;
}

bool is_connected(const LinkGraph& graph) {
    if (graph.node_count <= 1) return true;
    const auto adj = graph.adjacency();
    std::vector<char> seen(graph.node_count, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            ++count;
            frontier.push(v);
        }
    }
    return count == graph.node_count;
}

}  // namespace coco

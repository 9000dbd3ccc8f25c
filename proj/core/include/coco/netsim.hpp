#pragma once

#include <optional>
#include <vector>

#include "coco/channel.hpp"
#include "coco/geometry.hpp"
#include "coco/rng.hpp"

namespace coco {

/// Instantaneous undirected link graph sampled from the channel.
/// Each unordered pair is stored once (a < b) with its sampled RSS.
struct LinkGraph {
    struct Link {
        int a = 0;
        int b = 0;
        double rss_dbm = 0.0;
    };

    int node_count = 0;
    std::vector<Link> links;

    std::vector<std::vector<int>> adjacency() const;
};

/// All-pairs hop counts and next hops over the link graph.
/// Unreachable pairs carry no value rather than a sentinel hop count.
struct RoutingTables {
    int node_count = 0;
    std::vector<std::vector<std::optional<int>>> hops;      ///< hops[i][j]
    std::vector<std::vector<std::optional<int>>> next_hop;  ///< first hop from i toward j

    bool reachable(int i, int j) const { return hops[i][j].has_value(); }
};

/// Samples one RSS per unordered pair (ascending (i, j), i < j) and keeps the
/// links whose sample clears the receiver sensitivity.
LinkGraph build_link_graph(const std::vector<Vec2>& positions, const ChannelParams& params,
                           Rng& rng);

/// Breadth-first all-pairs shortest hop counts over unweighted links.
RoutingTables compute_routing_tables(const LinkGraph& graph);

/// Nodes j != i with hops(i, j) <= k, ascending order. Requires k >= 1.
std::vector<int> k_hop_neighborhood(const RoutingTables& tables, int node, int k);

/// Fixed-radius baseline: j is a neighbor of i iff their distance <= radius.
std::vector<std::vector<int>> disk_neighborhood(const std::vector<Vec2>& positions,
                                                double radius_m);

/// True iff a single connected component spans every node.
bool is_connected(const LinkGraph& graph);

}  // namespace coco

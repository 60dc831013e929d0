#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace d2d {

using NodeId = std::uint32_t;

enum class Metric { hops, weight };
enum class Centrality { degree, betweenness, closeness };

struct Edge {
    NodeId src;
    NodeId dst;
    double weight;
};

struct Neighbor {
    NodeId node;
    double weight;
};

struct PathResult {
    std::vector<NodeId> nodes;  // src .. dst inclusive
    std::size_t hop_count = 0;  // nodes.size() - 1
    double weight_sum = 0.0;    // sum of edge weights along nodes
};

// Weighted graph, directed or undirected. Adjacency lists are kept sorted by
// neighbor id so traversal order (and therefore every tie-break downstream)
// is deterministic.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t node_count, bool directed) : n_(node_count), directed_(directed), adj_(node_count) {}

    std::size_t node_count() const { return n_; }
    bool directed() const { return directed_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Neighbor>& neighbors(NodeId u) const { return adj_.at(u); }

    // Rejects self-loops, duplicate edges, negative weights, bad indices.
    void add_edge(NodeId u, NodeId v, double weight = 1.0);
    bool has_edge(NodeId u, NodeId v) const;
    // 0 when the edge is absent.
    double edge_weight_or(NodeId u, NodeId v, double fallback = 0.0) const;

private:
    const Neighbor* find_neighbor(NodeId u, NodeId v) const;
    void insert_neighbor(NodeId u, NodeId v, double w);

    std::size_t n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
};

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

// Minimum path under the metric; among equal-cost paths the lexicographically
// smallest node sequence. nullopt when dst is unreachable.
std::optional<PathResult> shortest_path(const Graph& g, NodeId src, NodeId dst, Metric metric);

// Single-source hop-metric shortest paths sharing shortest_path's
// lexicographic tie-break; parent pointers encode the chosen paths.
struct HopPathTree {
    static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
    NodeId source = 0;
    std::vector<std::uint32_t> dist;    // hop counts, kUnreached when unreachable
    std::vector<NodeId> parent;         // kUnreached for source and unreachable nodes

    bool reachable(NodeId v) const { return dist[v] != kUnreached; }
    std::vector<NodeId> path_to(NodeId v) const;  // empty when unreachable
    // Second node on the path source -> v (the source's outgoing hop);
    // kUnreached when v is the source or unreachable.
    NodeId first_hop(NodeId v) const;
};
HopPathTree hop_shortest_tree(const Graph& g, NodeId src);

// Distances from src to every node, infinity when unreachable.
std::vector<double> single_source_distances(const Graph& g, NodeId src, Metric metric);

// Row-major n*n matrix, entry [u*n + v] = distance u -> v, infinity when
// unreachable.
std::vector<double> all_pairs_distances(const Graph& g, Metric metric);

// Maximum finite pairwise distance; 0 for a single node or when nothing is
// reachable.
double diameter(const Graph& g, Metric metric);

std::vector<double> classical_centrality(const Graph& g, Centrality kind);

// Edge-list CSV, header `src,dst,weight`; undirected graphs list each edge once.
void write_edge_csv(const Graph& g, const std::string& path);
Graph read_edge_csv(const std::string& path, std::size_t node_count, bool directed);

} // namespace d2d

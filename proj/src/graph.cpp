#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "csv.hpp"

namespace d2d {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

const Neighbor* Graph::find_neighbor(NodeId u, NodeId v) const {
    const auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Neighbor& a, NodeId b) { return a.node < b; });
    if (it != row.end() && it->node == v) return &*it;
    return nullptr;
}

void Graph::insert_neighbor(NodeId u, NodeId v, double w) {
    auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Neighbor& a, NodeId b) { return a.node < b; });
    row.insert(it, Neighbor{v, w});
}

void Graph::add_edge(NodeId u, NodeId v, double weight) {
    if (u >= n_ || v >= n_) fail("edge endpoint out of range");
    if (u == v) fail("self-loops are not allowed");
    if (!(weight >= 0.0) || !std::isfinite(weight)) fail("edge weight must be finite and non-negative");
    if (find_neighbor(u, v)) fail("duplicate edge");
    edges_.push_back(Edge{u, v, weight});
    insert_neighbor(u, v, weight);
    if (!directed_) insert_neighbor(v, u, weight);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) return false;
    return find_neighbor(u, v) != nullptr;
}

double Graph::edge_weight_or(NodeId u, NodeId v, double fallback) const {
    if (u >= n_ || v >= n_) return fallback;
    const Neighbor* nb = find_neighbor(u, v);
    return nb ? nb->weight : fallback;
}

std::vector<NodeId> HopPathTree::path_to(NodeId v) const {
    std::vector<NodeId> out;
    if (!reachable(v)) return out;
    for (NodeId cur = v;; cur = parent[cur]) {
        out.push_back(cur);
        if (cur == source) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

NodeId HopPathTree::first_hop(NodeId v) const {
    if (!reachable(v) || v == source) return kUnreached;
    NodeId cur = v;
    while (parent[cur] != source) cur = parent[cur];
    return cur;
}

// Layered BFS that selects, per node, the parent whose own path is
// lexicographically smallest. Processing a layer in path-rank order and each
// adjacency list in id order means the first touch of a node is exactly the
// lexicographically smallest shortest path to it.
HopPathTree hop_shortest_tree(const Graph& g, NodeId src) {
    const std::size_t n = g.node_count();
    if (src >= n) fail("source out of range");
    HopPathTree t;
    t.source = src;
    t.dist.assign(n, HopPathTree::kUnreached);
    t.parent.assign(n, HopPathTree::kUnreached);
    std::vector<NodeId> layer{src};
    t.dist[src] = 0;
    std::uint32_t depth = 0;
    while (!layer.empty()) {
        ++depth;
        std::vector<NodeId> next;
        for (NodeId u : layer) {
            for (const Neighbor& nb : g.neighbors(u)) {
                if (t.dist[nb.node] != HopPathTree::kUnreached) continue;
                t.dist[nb.node] = depth;
                t.parent[nb.node] = u;
                next.push_back(nb.node);
            }
        }
        layer = std::move(next);
    }
    return t;
}

namespace {

struct WeightLabel {
    double dist;
    std::vector<NodeId> path;
};

struct WeightLabelAfter {
    bool operator()(const WeightLabel& a, const WeightLabel& b) const {
        if (a.dist != b.dist) return a.dist > b.dist;
        return a.path > b.path;
    }
};

// Dijkstra carrying full path labels so equal-cost ties resolve to the
// lexicographically smallest node sequence. Labels pop in increasing
// (dist, path) order because every extension strictly exceeds its prefix.
std::optional<PathResult> weight_shortest_path(const Graph& g, NodeId src, NodeId dst) {
    const std::size_t n = g.node_count();
    std::vector<char> done(n, 0);
    std::priority_queue<WeightLabel, std::vector<WeightLabel>, WeightLabelAfter> open;
    open.push(WeightLabel{0.0, {src}});
    while (!open.empty()) {
        WeightLabel cur = open.top();
        open.pop();
        const NodeId u = cur.path.back();
        if (done[u]) continue;
        done[u] = 1;
        if (u == dst) {
            PathResult out;
            out.nodes = std::move(cur.path);
            out.hop_count = out.nodes.size() - 1;
            out.weight_sum = cur.dist;
            return out;
        }
        for (const Neighbor& nb : g.neighbors(u)) {
            if (done[nb.node]) continue;
            WeightLabel ext{cur.dist + nb.weight, cur.path};
            ext.path.push_back(nb.node);
            open.push(std::move(ext));
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<double> single_source_distances(const Graph& g, NodeId src, Metric metric) {
    const std::size_t n = g.node_count();
    if (src >= n) fail("source out of range");
    if (metric == Metric::hops) {
        HopPathTree t = hop_shortest_tree(g, src);
        std::vector<double> dist(n, kInfiniteDistance);
        for (NodeId v = 0; v < n; ++v) {
            if (t.reachable(v)) dist[v] = static_cast<double>(t.dist[v]);
        }
        return dist;
    }
    std::vector<double> dist(n, kInfiniteDistance);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;
    dist[src] = 0.0;
    open.push({0.0, src});
    while (!open.empty()) {
        auto [d, u] = open.top();
        open.pop();
        if (d > dist[u]) continue;
        for (const Neighbor& nb : g.neighbors(u)) {
            const double nd = d + nb.weight;
            if (nd < dist[nb.node]) {
                dist[nb.node] = nd;
                open.push({nd, nb.node});
            }
        }
    }
    return dist;
}

std::optional<PathResult> shortest_path(const Graph& g, NodeId src, NodeId dst, Metric metric) {
    const std::size_t n = g.node_count();
    if (src >= n || dst >= n) fail("path endpoint out of range");
    if (metric == Metric::weight) return weight_shortest_path(g, src, dst);
    HopPathTree t = hop_shortest_tree(g, src);
    if (!t.reachable(dst)) return std::nullopt;
    PathResult out;
    out.nodes = t.path_to(dst);
    out.hop_count = out.nodes.size() - 1;
    out.weight_sum = 0.0;
    for (std::size_t i = 0; i + 1 < out.nodes.size(); ++i) {
        out.weight_sum += g.edge_weight_or(out.nodes[i], out.nodes[i + 1]);
    }
    return out;
}

std::vector<double> all_pairs_distances(const Graph& g, Metric metric) {
    const std::size_t n = g.node_count();
    std::vector<double> out(n * n, kInfiniteDistance);
    for (NodeId s = 0; s < n; ++s) {
        const std::vector<double> dist = single_source_distances(g, s, metric);
        for (NodeId v = 0; v < n; ++v) out[s * n + v] = dist[v];
    }
    return out;
}

double diameter(const Graph& g, Metric metric) {
    const std::vector<double> d = all_pairs_distances(g, metric);
    double best = 0.0;
    for (double x : d) {
        if (std::isfinite(x) && x > best) best = x;
    }
    return best;
}

namespace {

std::vector<double> betweenness_scores(const Graph& g) {
    // Brandes accumulation over unweighted shortest paths; ordered pairs, so
    // undirected graphs count each direction.
    const std::size_t n = g.node_count();
    std::vector<double> score(n, 0.0);
    std::vector<std::uint32_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<NodeId> order;
    order.reserve(n);
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), HopPathTree::kUnreached);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();
        std::queue<NodeId> q;
        dist[s] = 0;
        sigma[s] = 1.0;
        q.push(s);
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            order.push_back(u);
            for (const Neighbor& nb : g.neighbors(u)) {
                if (dist[nb.node] == HopPathTree::kUnreached) {
                    dist[nb.node] = dist[u] + 1;
                    q.push(nb.node);
                }
                if (dist[nb.node] == dist[u] + 1) {
                    sigma[nb.node] += sigma[u];
                    preds[nb.node].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId p : preds[w]) {
                delta[p] += sigma[p] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) score[w] += delta[w];
        }
    }
    return score;
}

} // namespace

std::vector<double> classical_centrality(const Graph& g, Centrality kind) {
    const std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    switch (kind) {
    case Centrality::degree:
        for (NodeId u = 0; u < n; ++u) out[u] = static_cast<double>(g.neighbors(u).size());
        return out;
    case Centrality::closeness:
        for (NodeId u = 0; u < n; ++u) {
            HopPathTree t = hop_shortest_tree(g, u);
            double sum = 0.0;
            for (NodeId v = 0; v < n; ++v) {
                if (v != u && t.reachable(v)) sum += static_cast<double>(t.dist[v]);
            }
            out[u] = sum > 0.0 ? static_cast<double>(n - 1) / sum : 0.0;
        }
        return out;
    case Centrality::betweenness:
        return betweenness_scores(g);
    }
    fail("unknown centrality kind");
}

void write_edge_csv(const Graph& g, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "src,dst,weight\n";
    for (const Edge& e : g.edges()) {
        out << e.src << ',' << e.dst << ',' << format_double(e.weight) << '\n';
    }
}

Graph read_edge_csv(const std::string& path, std::size_t node_count, bool directed) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"src", "dst", "weight"}) {
        fail("expected edge csv header src,dst,weight in " + path);
    }
    Graph g(node_count, directed);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 3) fail("malformed edge row in " + path);
        g.add_edge(static_cast<NodeId>(parse_uint_field(f[0], path)), static_cast<NodeId>(parse_uint_field(f[1], path)),
                   parse_double_field(f[2], path));
    }
    return g;
}

} // namespace d2d

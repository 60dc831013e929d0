#include "influence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace d2d {

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

double transform_weight(double w, DistanceTransform t) {
    switch (t) {
    case DistanceTransform::identity: return w;
    case DistanceTransform::one_minus: return std::max(0.0, 1.0 - w);
    case DistanceTransform::reciprocal: return w > 0.0 ? 1.0 / w : kInfiniteDistance;
    }
    throw std::invalid_argument("unknown distance transform");
}

namespace {

// Influence of m on each of its neighbors at once: every tied peer's shortest
// path contributes to exactly one neighbor, the path's first hop (a neighbor
// at distance >= 2 cannot sit on a shortest path from m).
std::vector<std::pair<NodeId, double>> influence_from(NodeId m, const Graph& d2d, const SocialLayer& social) {
    if (social.ue_count() < d2d.node_count())
        throw std::invalid_argument("social layer does not cover the D2D graph");
    const HopPathTree tree = hop_shortest_tree(d2d, m);
    std::vector<double> acc(d2d.node_count(), 0.0);
    for (std::uint32_t u : social.communities_of[m]) {
        for (const Neighbor& peer : social.tie_graphs[u].neighbors(m)) {
            if (!tree.reachable(peer.node) || peer.node == m) continue;
            acc[tree.first_hop(peer.node)] += peer.weight / static_cast<double>(tree.dist[peer.node]);
        }
    }
    std::vector<std::pair<NodeId, double>> out;
    out.reserve(d2d.neighbors(m).size());
    for (const Neighbor& nb : d2d.neighbors(m)) out.emplace_back(nb.node, acc[nb.node]);
    return out;
}

} // namespace

double one_hop_influence(NodeId m, NodeId n, const Graph& d2d, const SocialLayer& social) {
    if (!d2d.has_edge(m, n)) throw std::invalid_argument("one_hop_influence requires a D2D edge");
    for (const auto& [node, value] : influence_from(m, d2d, social)) {
        if (node == n) return value;
    }
    return 0.0;
}

namespace {

void fill_neighborhoods(InfluenceGraph& ig, double d_fraction_or_value, bool is_fraction,
                        DistanceTransform transform) {
    const std::size_t n = ig.g.node_count();
    Graph dist_graph(n, true);
    for (const Edge& e : ig.g.edges()) {
        const double w = transform_weight(e.weight, transform);
        if (std::isfinite(w)) dist_graph.add_edge(e.src, e.dst, w);
    }
    const std::vector<double> dist = all_pairs_distances(dist_graph, Metric::weight);
    if (is_fraction) {
        double diam = 0.0;
        for (double x : dist) {
            if (std::isfinite(x) && x > diam) diam = x;
        }
        ig.d_value = d_fraction_or_value * diam;
    } else {
        ig.d_value = d_fraction_or_value;
    }
    ig.d_neighbors.assign(n, {});
    for (NodeId m = 0; m < n; ++m) {
        for (NodeId v = 0; v < n; ++v) {
            if (dist[m * n + v] <= ig.d_value) ig.d_neighbors[v].push_back(m);
        }
    }
}

} // namespace

InfluenceGraph build_influence_graph(const Graph& d2d, const SocialLayer& social, double d_fraction,
                                     DistanceTransform transform) {
    if (!(d_fraction > 0.0)) throw std::invalid_argument("d_fraction must be positive");
    const std::size_t n = d2d.node_count();
    InfluenceGraph ig;
    ig.g = Graph(n, true);
    ig.one_hop.assign(n, {});
    for (NodeId m = 0; m < n; ++m) {
        for (const auto& [nb, value] : influence_from(m, d2d, social)) {
            ig.g.add_edge(m, nb, value);
            ig.one_hop[m].push_back(nb);
        }
    }
    fill_neighborhoods(ig, d_fraction, true, transform);
    return ig;
}

InfluenceGraph assemble_influence_graph(Graph weights, std::vector<std::vector<NodeId>> one_hop,
                                        double d_value, DistanceTransform transform) {
    InfluenceGraph ig;
    ig.g = std::move(weights);
    ig.one_hop = std::move(one_hop);
    if (ig.one_hop.size() != ig.g.node_count())
        throw std::invalid_argument("one_hop sets must cover every node");
    fill_neighborhoods(ig, d_value, false, transform);
    return ig;
}

double d_influence(const InfluenceGraph& ig, NodeId n, const std::vector<char>& in_s, InnerTerm inner) {
    if (n >= ig.ue_count() || in_s.size() != ig.ue_count())
        throw std::invalid_argument("d_influence: bad node or mask size");
    double total = 0.0;
    for (NodeId j : ig.d_neighbors[n]) {
        double miss = 1.0;
        for (NodeId m : ig.one_hop[j]) {
            if (!in_s[m]) continue;
            miss *= 1.0 - clamp01(ig.weight(m, inner == InnerTerm::toward_focal ? n : j));
        }
        total += 1.0 - miss;
    }
    return total;
}

double d_influence(const InfluenceGraph& ig, NodeId n, const std::vector<NodeId>& s, InnerTerm inner) {
    std::vector<char> mask(ig.ue_count(), 0);
    for (NodeId k : s) mask.at(k) = 1;
    return d_influence(ig, n, mask, inner);
}

double exclusive_influence(const InfluenceGraph& ig, NodeId n, NodeId k, const std::vector<char>& in_s,
                           InnerTerm inner) {
    if (k >= in_s.size() || !in_s[k]) throw std::invalid_argument("exclusive_influence requires k in S");
    std::vector<char> without = in_s;
    without[k] = 0;
    return d_influence(ig, n, in_s, inner) - d_influence(ig, n, without, inner);
}

double coalition_value(const InfluenceGraph& ig, const std::vector<char>& in_s, const std::vector<double>& alpha,
                       InnerTerm inner) {
    if (alpha.size() != ig.ue_count() || in_s.size() != ig.ue_count())
        throw std::invalid_argument("coalition_value: bad mask or price size");
    bool empty = true;
    for (char c : in_s) {
        if (c) {
            empty = false;
            break;
        }
    }
    if (empty) return 0.0;
    double total = 0.0;
    for (NodeId n = 0; n < ig.ue_count(); ++n) {
        if (!in_s[n]) total += alpha[n] * d_influence(ig, n, in_s, inner);
    }
    return total;
}

} // namespace d2d

#include "socialnet.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "csv.hpp"
#include "rng.hpp"

namespace d2d {

bool SocialLayer::is_member(std::uint32_t community, NodeId ue) const {
    const auto& m = members[community];
    return std::binary_search(m.begin(), m.end(), ue);
}

SocialLayer make_social_layer(std::size_t ue_count, std::vector<std::vector<NodeId>> memberships,
                              const std::vector<TieRecord>& ties) {
    SocialLayer layer;
    layer.members = std::move(memberships);
    layer.communities_of.assign(ue_count, {});
    for (std::uint32_t l = 0; l < layer.members.size(); ++l) {
        auto& m = layer.members[l];
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        for (NodeId ue : m) {
            if (ue >= ue_count) throw std::invalid_argument("membership refers to an unknown ue id");
            layer.communities_of[ue].push_back(l);
        }
    }
    layer.tie_graphs.assign(layer.members.size(), Graph(ue_count, false));
    for (const TieRecord& t : ties) {
        if (t.community >= layer.members.size()) throw std::invalid_argument("tie refers to an unknown community");
        if (t.a >= ue_count || t.b >= ue_count) throw std::invalid_argument("tie refers to an unknown ue id");
        layer.tie_graphs[t.community].add_edge(t.a, t.b, t.weight);
    }
    return layer;
}

SocialLayer sample_social_layer(std::size_t ue_count, std::vector<std::vector<NodeId>> memberships,
                                double tie_density, std::uint64_t rng_seed) {
    if (!(tie_density >= 0.0 && tie_density <= 1.0))
        throw std::invalid_argument("tie_density must lie in [0, 1]");
    RngStream rng(rng_seed);
    std::vector<TieRecord> ties;
    for (auto& m : memberships) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    for (std::uint32_t l = 0; l < memberships.size(); ++l) {
        const auto& m = memberships[l];
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                if (rng.bernoulli(tie_density)) {
                    ties.push_back(TieRecord{l, m[i], m[j], rng.uniform_pos()});
                }
            }
        }
    }
    return make_social_layer(ue_count, std::move(memberships), ties);
}

std::vector<std::string> validate_social_layer(const SocialLayer& layer) {
    std::vector<std::string> out;
    for (std::size_t ue = 0; ue < layer.ue_count(); ++ue) {
        if (layer.communities_of[ue].empty()) out.push_back("uncovered UE " + std::to_string(ue));
    }
    for (std::uint32_t l = 0; l < layer.community_count(); ++l) {
        if (layer.members[l].empty()) out.push_back("empty community " + std::to_string(l));
        for (const Edge& e : layer.tie_graphs[l].edges()) {
            const std::string pair = std::to_string(e.src) + "," + std::to_string(e.dst) +
                                     " in community " + std::to_string(l);
            if (!layer.is_member(l, e.src) || !layer.is_member(l, e.dst))
                out.push_back("tie between non-members " + pair);
            if (!(e.weight > 0.0 && e.weight <= 1.0)) out.push_back("tie out of range " + pair);
        }
    }
    return out;
}

LineGraph build_line_graph(const SocialLayer& social, const Graph& d2d, LineKind kind) {
    if (d2d.node_count() < social.ue_count())
        throw std::invalid_argument("d2d graph does not cover the social layer");
    const std::uint32_t L = social.community_count();
    LineGraph out;
    out.kind = kind;
    out.graph = Graph(L, true);
    std::vector<std::unique_ptr<HopPathTree>> trees(d2d.node_count());
    auto tree_for = [&](NodeId src) -> const HopPathTree& {
        if (!trees[src]) trees[src] = std::make_unique<HopPathTree>(hop_shortest_tree(d2d, src));
        return *trees[src];
    };
    std::vector<double> weight(L * L, 0.0);
    std::vector<double> touched(L, 0.0);
    for (std::uint32_t u = 0; u < L; ++u) {
        const auto& mem = social.members[u];
        for (std::size_t i = 0; i < mem.size(); ++i) {
            const HopPathTree& tree = tree_for(mem[i]);
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                if (!tree.reachable(mem[j])) continue;
                const std::vector<NodeId> path = tree.path_to(mem[j]);
                std::vector<std::uint32_t> hit;
                for (std::size_t p = 1; p < path.size(); ++p) {
                    for (std::uint32_t v : social.communities_of[path[p]]) {
                        if (v == u) continue;
                        if (touched[v] == 0.0) hit.push_back(v);
                        touched[v] += 1.0;
                    }
                }
                const double tie = social.tie_graphs[u].edge_weight_or(mem[i], mem[j]);
                for (std::uint32_t v : hit) {
                    weight[u * L + v] += kind == LineKind::influence ? tie * touched[v] : 1.0;
                    touched[v] = 0.0;
                }
            }
        }
    }
    for (std::uint32_t u = 0; u < L; ++u) {
        for (std::uint32_t v = 0; v < L; ++v) {
            if (u != v && weight[u * L + v] > 0.0) out.graph.add_edge(u, v, weight[u * L + v]);
        }
    }
    return out;
}

void write_membership_csv(const SocialLayer& layer, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "ue_id,community_id\n";
    for (std::size_t ue = 0; ue < layer.ue_count(); ++ue) {
        for (std::uint32_t l : layer.communities_of[ue]) out << ue << ',' << l << '\n';
    }
}

std::vector<std::vector<NodeId>> read_membership_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"ue_id", "community_id"})
        throw std::runtime_error("expected membership header ue_id,community_id in " + path);
    std::vector<std::vector<NodeId>> memberships;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 2) throw std::runtime_error("malformed membership row in " + path);
        const auto ue = static_cast<NodeId>(parse_uint_field(f[0], path));
        const auto community = parse_uint_field(f[1], path);
        if (community >= memberships.size()) memberships.resize(community + 1);
        memberships[community].push_back(ue);
    }
    return memberships;
}

void write_ties_csv(const SocialLayer& layer, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "community_id,ue_a,ue_b,weight\n";
    for (std::uint32_t l = 0; l < layer.community_count(); ++l) {
        for (const Edge& e : layer.tie_graphs[l].edges()) {
            const NodeId a = std::min(e.src, e.dst);
            const NodeId b = std::max(e.src, e.dst);
            out << l << ',' << a << ',' << b << ',' << format_double(e.weight) << '\n';
        }
    }
}

std::vector<TieRecord> read_ties_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line) ||
        split_csv_line(line) != std::vector<std::string>{"community_id", "ue_a", "ue_b", "weight"})
        throw std::runtime_error("expected ties header community_id,ue_a,ue_b,weight in " + path);
    std::vector<TieRecord> ties;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 4) throw std::runtime_error("malformed tie row in " + path);
        TieRecord t;
        t.community = static_cast<std::uint32_t>(parse_uint_field(f[0], path));
        t.a = static_cast<NodeId>(parse_uint_field(f[1], path));
        t.b = static_cast<NodeId>(parse_uint_field(f[2], path));
        if (t.a > t.b) std::swap(t.a, t.b);
        t.weight = parse_double_field(f[3], path);
        ties.push_back(t);
    }
    return ties;
}

} // namespace d2d

#include "shapley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace d2d {

std::vector<double> exact_shapley(const CharacteristicGame& game) {
    const std::size_t n = game.player_count;
    if (n > kMaxExactPlayers)
        throw std::invalid_argument("exact_shapley enumerates subsets and is capped at " +
                                    std::to_string(kMaxExactPlayers) +
                                    " players; use closed_form_sv for larger instances");
    if (n == 0) return {};
    const std::uint32_t full = (1u << n) - 1;
    std::vector<double> v(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask) v[mask] = game.value(mask);
    // weight[r] = r! (n-1-r)! / n!
    std::vector<double> weight(n, 0.0);
    for (std::size_t r = 0; r + 1 <= n; ++r) {
        double w = 1.0 / static_cast<double>(n);
        for (std::size_t i = 1; i <= r; ++i) w *= static_cast<double>(i) / static_cast<double>(n - i);
        weight[r] = w;
    }
    std::vector<double> phi(n, 0.0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const double w = weight[std::popcount(mask)];
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (1u << k)) continue;
            phi[k] += w * (v[mask | (1u << k)] - v[mask]);
        }
    }
    return phi;
}

NeighborhoodModel neighborhood_model(const InfluenceGraph& ig) {
    NeighborhoodModel m;
    m.one_hop = ig.one_hop;
    m.d_neighbors = ig.d_neighbors;
    m.d_value = ig.d_value;
    return m;
}

NeighborhoodModel make_neighborhood_model(const Graph& g, double d_fraction, DistanceTransform transform) {
    if (!(d_fraction > 0.0)) throw std::invalid_argument("d_fraction must be positive");
    const std::size_t n = g.node_count();
    Graph dist_graph(n, true);
    for (const Edge& e : g.edges()) {
        const double w = transform_weight(e.weight, transform);
        if (std::isfinite(w)) {
            dist_graph.add_edge(e.src, e.dst, w);
            if (!g.directed()) dist_graph.add_edge(e.dst, e.src, w);
        }
    }
    NeighborhoodModel m;
    m.one_hop.assign(n, {});
    for (NodeId k = 0; k < n; ++k) {
        for (const Neighbor& nb : g.neighbors(k)) m.one_hop[k].push_back(nb.node);
    }
    // Two streaming passes keep memory linear: diameter first, then the
    // membership fill against the resulting threshold.
    double diam = 0.0;
    for (NodeId s = 0; s < n; ++s) {
        for (double x : single_source_distances(dist_graph, s, Metric::weight)) {
            if (std::isfinite(x) && x > diam) diam = x;
        }
    }
    m.d_value = d_fraction * diam;
    m.d_neighbors.assign(n, {});
    for (NodeId s = 0; s < n; ++s) {
        const std::vector<double> dist = single_source_distances(dist_graph, s, Metric::weight);
        for (NodeId v = 0; v < n; ++v) {
            if (dist[v] <= m.d_value) m.d_neighbors[v].push_back(s);
        }
    }
    return m;
}

std::vector<double> closed_form_sv(const NeighborhoodModel& model, const std::vector<double>& alpha) {
    const std::size_t n = model.node_count();
    if (alpha.size() != n) throw std::invalid_argument("closed_form_sv: price vector size mismatch");
    std::vector<double> phi(n, 0.0);
    std::vector<std::uint32_t> stamp(n, 0xffffffffu);
    for (NodeId target = 0; target < n; ++target) {
        const double share = alpha[target] / (1.0 + static_cast<double>(model.d_neighbors[target].size()));
        for (NodeId m : model.d_neighbors[target]) stamp[m] = target;
        for (NodeId k = 0; k < n; ++k) {
            if (k == target) continue;
            for (NodeId nb : model.one_hop[k]) {
                if (stamp[nb] == target) {
                    phi[k] += share;
                    break;
                }
            }
        }
    }
    return phi;
}

namespace {

// cover_mask[n] = bitmask of players k whose one-hop set meets C_{n,d}.
std::vector<std::uint32_t> cover_masks(const NeighborhoodModel& model) {
    const std::size_t n = model.node_count();
    if (n > 32) throw std::invalid_argument("indicator games are capped at 32 nodes");
    std::vector<char> in_cnd(n, 0);
    std::vector<std::uint32_t> cover(n, 0);
    for (NodeId target = 0; target < n; ++target) {
        for (NodeId m : model.d_neighbors[target]) in_cnd[m] = 1;
        for (NodeId k = 0; k < n; ++k) {
            for (NodeId nb : model.one_hop[k]) {
                if (in_cnd[nb]) {
                    cover[target] |= 1u << k;
                    break;
                }
            }
        }
        for (NodeId m : model.d_neighbors[target]) in_cnd[m] = 0;
    }
    return cover;
}

} // namespace

CharacteristicGame indicator_surrogate_game(const NeighborhoodModel& model, const std::vector<double>& alpha) {
    CharacteristicGame game;
    game.player_count = model.node_count();
    game.value = [cover = cover_masks(model), alpha](std::uint32_t mask) {
        double total = 0.0;
        for (std::size_t n = 0; n < alpha.size(); ++n) {
            if (!(mask & (1u << n)) && (mask & cover[n])) total += alpha[n];
        }
        return total;
    };
    return game;
}

CharacteristicGame indicator_coverage_game(const NeighborhoodModel& model, const std::vector<double>& alpha) {
    CharacteristicGame game;
    game.player_count = model.node_count();
    game.value = [cover = cover_masks(model), alpha](std::uint32_t mask) {
        double total = 0.0;
        for (std::size_t n = 0; n < alpha.size(); ++n) {
            if (mask & cover[n]) total += alpha[n];
        }
        return total;
    };
    return game;
}

std::vector<double> coverage_game_sv(const NeighborhoodModel& model, const std::vector<double>& alpha) {
    const std::vector<std::uint32_t> cover = cover_masks(model);
    std::vector<double> phi(model.node_count(), 0.0);
    for (std::size_t n = 0; n < cover.size(); ++n) {
        const int coverers = std::popcount(cover[n]);
        if (coverers == 0) continue;
        const double share = alpha[n] / static_cast<double>(coverers);
        for (std::size_t k = 0; k < phi.size(); ++k) {
            if (cover[n] & (1u << k)) phi[k] += share;
        }
    }
    return phi;
}

CharacteristicGame probabilistic_game(const InfluenceGraph& ig, const std::vector<double>& alpha, InnerTerm inner) {
    CharacteristicGame game;
    game.player_count = ig.ue_count();
    game.value = [&ig, alpha, inner](std::uint32_t mask) {
        std::vector<char> in_s(ig.ue_count(), 0);
        for (std::size_t k = 0; k < ig.ue_count(); ++k) in_s[k] = (mask >> k) & 1u;
        return coalition_value(ig, in_s, alpha, inner);
    };
    return game;
}

const char* seed_method_name(SeedMethod m) {
    switch (m) {
    case SeedMethod::sv: return "SV";
    case SeedMethod::sv_influence: return "SV:influence";
    case SeedMethod::sv_connectivity: return "SV:connectivity";
    case SeedMethod::degree: return "degree";
    case SeedMethod::betweenness: return "betweenness";
    case SeedMethod::closeness: return "closeness";
    }
    return "?";
}

bool parse_seed_method(const std::string& name, SeedMethod& out) {
    for (SeedMethod m : {SeedMethod::sv, SeedMethod::sv_influence, SeedMethod::sv_connectivity,
                         SeedMethod::degree, SeedMethod::betweenness, SeedMethod::closeness}) {
        if (name == seed_method_name(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

OffloadingPower offloading_power(const SocialLayer& social, const std::vector<std::vector<double>>& community_sv,
                                 const std::vector<double>& line_sv) {
    const std::uint32_t L = social.community_count();
    if (community_sv.size() != L || line_sv.size() != L)
        throw std::invalid_argument("offloading_power: per-community inputs must cover every community");
    OffloadingPower out;
    out.per_member.resize(L);
    out.per_ue.assign(social.ue_count(), 0.0);
    for (std::uint32_t l = 0; l < L; ++l) {
        const auto& mem = social.members[l];
        if (community_sv[l].size() != mem.size())
            throw std::invalid_argument("offloading_power: community value vector size mismatch");
        double sum = 0.0;
        for (double v : community_sv[l]) sum += v;
        out.per_member[l].resize(mem.size());
        for (std::size_t i = 0; i < mem.size(); ++i) {
            const double share = sum > 0.0 ? community_sv[l][i] / sum : 1.0 / static_cast<double>(mem.size());
            const double power = share * line_sv[l];
            out.per_member[l][i] = power;
            out.per_ue[mem[i]] = std::max(out.per_ue[mem[i]], power);
        }
    }
    return out;
}

std::vector<NodeId> select_seeds(const CentralityReport& report, const SocialLayer& social) {
    const std::uint32_t L = social.community_count();
    if (report.member_score.size() != L || report.sv_social.size() < social.ue_count())
        throw std::invalid_argument("select_seeds: report does not cover the social layer");
    std::vector<NodeId> seeds(L);
    // Line-method power is (social share) x (community line value); the line
    // value is one constant per community, so the within-community argmax is
    // the social-SV argmax. Ranking by the share key directly keeps the two
    // line methods' picks free of rounding ties from the product, and covers
    // zero-valued communities, where the power alone says nothing.
    const bool line_method =
        report.method == SeedMethod::sv_influence || report.method == SeedMethod::sv_connectivity;
    for (std::uint32_t l = 0; l < L; ++l) {
        const auto& mem = social.members[l];
        if (mem.empty()) throw std::invalid_argument("select_seeds: empty community");
        const auto& scores = report.member_score[l];
        std::size_t best = 0;
        for (std::size_t i = 1; i < mem.size(); ++i) {
            const double cur = line_method ? report.sv_social[mem[i]] : scores[i];
            const double top = line_method ? report.sv_social[mem[best]] : scores[best];
            if (cur > top) best = i;  // members are id-sorted, so > keeps the smallest id on ties
        }
        seeds[l] = mem[best];
    }
    return seeds;
}

} // namespace d2d

#include "doctest.h"

#include <filesystem>
#include <random>

#include "oracle.hpp"
#include "socialnet.hpp"

using namespace d2d;

namespace {

// Five UEs on a line 0-1-2-3-4.
Graph line_d2d() {
    Graph g(5, false);
    for (NodeId u = 0; u < 4; ++u) g.add_edge(u, u + 1, 1.0);
    return g;
}

SocialLayer two_community_layer() {
    // Community 0 holds the line's endpoints, community 1 the interior.
    std::vector<std::vector<NodeId>> memberships{{0, 4}, {1, 2, 3}};
    std::vector<TieRecord> ties{
        {0, 0, 4, 0.6},
        {1, 1, 2, 0.5},
        {1, 2, 3, 0.5},
    };
    return make_social_layer(5, std::move(memberships), ties);
}

// Random overlapping layer over a random connected topology.
SocialLayer random_layer(std::mt19937_64& rng, std::size_t n, std::uint32_t communities) {
    std::uniform_int_distribution<std::uint32_t> pick(0, communities - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<NodeId>> memberships(communities);
    for (NodeId ue = 0; ue < n; ++ue) {
        memberships[pick(rng)].push_back(ue);
        if (unit(rng) < 0.3) memberships[pick(rng)].push_back(ue);
    }
    for (auto& m : memberships) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    std::vector<TieRecord> ties;
    for (std::uint32_t c = 0; c < communities; ++c) {
        const auto& mem = memberships[c];
        for (std::size_t i = 0; i < mem.size(); ++i) {
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                if (unit(rng) < 0.7) ties.push_back({c, mem[i], mem[j], 1.0 - unit(rng)});
            }
        }
    }
    return make_social_layer(n, std::move(memberships), ties);
}

} // namespace

TEST_CASE("layer assembly indexes members and ties consistently") {
    const SocialLayer layer = two_community_layer();
    CHECK(layer.ue_count() == 5);
    CHECK(layer.community_count() == 2);
    CHECK(layer.members[0] == std::vector<NodeId>{0, 4});
    CHECK(layer.communities_of[2] == std::vector<std::uint32_t>{1});
    CHECK(layer.is_member(0, 4));
    CHECK_FALSE(layer.is_member(0, 2));
    CHECK(layer.tie_graphs[0].edge_weight_or(0, 4) == doctest::Approx(0.6));
    CHECK(layer.tie_graphs[1].edge_weight_or(1, 2) == doctest::Approx(0.5));
    CHECK(validate_social_layer(layer).empty());
}

TEST_CASE("validation flags uncovered UEs, bad weights, and foreign ties") {
    std::vector<std::vector<NodeId>> memberships{{0, 1}, {2}};
    std::vector<TieRecord> ties{{0, 0, 1, 1.5}, {0, 0, 2, 0.5}};
    const SocialLayer layer = make_social_layer(4, std::move(memberships), ties);
    const auto problems = validate_social_layer(layer);
    // UE 3 uncovered, weight 1.5 out of range, tie 0-2 references a non-member.
    CHECK(problems.size() == 3);
}

TEST_CASE("sampled layer respects density bounds and determinism") {
    std::vector<std::vector<NodeId>> memberships{{0, 1, 2, 3, 4}};
    const SocialLayer full = sample_social_layer(5, memberships, 1.0, 11);
    CHECK(full.tie_graphs[0].edge_count() == 10);
    for (const Edge& e : full.tie_graphs[0].edges()) {
        CHECK(e.weight > 0.0);
        CHECK(e.weight <= 1.0);
    }
    const SocialLayer none = sample_social_layer(5, memberships, 0.0, 11);
    CHECK(none.tie_graphs[0].edge_count() == 0);
    const SocialLayer again = sample_social_layer(5, memberships, 1.0, 11);
    CHECK(again.tie_graphs[0].edges().size() == full.tie_graphs[0].edges().size());
    for (std::size_t i = 0; i < full.tie_graphs[0].edges().size(); ++i) {
        CHECK(again.tie_graphs[0].edges()[i].weight == full.tie_graphs[0].edges()[i].weight);
    }
    CHECK_THROWS_AS(sample_social_layer(5, memberships, 1.5, 11), std::invalid_argument);
}

TEST_CASE("line graph weights on the endpoint/interior example") {
    // The only member pair of community 0 is {0,4}; its shortest path
    // 0-1-2-3-4 runs through all three members of community 1, so the
    // influence weight is 0.6 * 3 = 1.8 and connectivity counts the one pair.
    const SocialLayer layer = two_community_layer();
    const Graph d2d = line_d2d();
    const LineGraph li = build_line_graph(layer, d2d, LineKind::influence);
    const LineGraph lc = build_line_graph(layer, d2d, LineKind::connectivity);
    CHECK(li.graph.node_count() == 2);
    CHECK(li.graph.edge_weight_or(0, 1) == doctest::Approx(1.8));
    CHECK(lc.graph.edge_weight_or(0, 1) == doctest::Approx(1.0));
    // Interior pairs {1,2},{2,3},{1,3} never pass through 0 or 4.
    CHECK_FALSE(li.graph.has_edge(1, 0));
    CHECK_FALSE(lc.graph.has_edge(1, 0));
}

TEST_CASE("untied member pairs still count for connectivity") {
    std::vector<std::vector<NodeId>> memberships{{0, 4}, {1, 2, 3}};
    const SocialLayer layer = make_social_layer(5, std::move(memberships), {});
    const Graph d2d = line_d2d();
    const LineGraph li = build_line_graph(layer, d2d, LineKind::influence);
    const LineGraph lc = build_line_graph(layer, d2d, LineKind::connectivity);
    CHECK_FALSE(li.graph.has_edge(0, 1));
    CHECK(lc.graph.edge_weight_or(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("line graphs match the path-enumeration oracle on random instances") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 15) {
        const Graph d2d = oracle::random_graph(rng, 8, 0.35, true);
        if (!oracle::is_connected(d2d)) continue;
        ++done;
        const SocialLayer layer = random_layer(rng, 8, 3);
        const auto expect = oracle::line_weights(layer, d2d);
        const LineGraph li = build_line_graph(layer, d2d, LineKind::influence);
        const LineGraph lc = build_line_graph(layer, d2d, LineKind::connectivity);
        for (std::uint32_t u = 0; u < 3; ++u) {
            for (std::uint32_t v = 0; v < 3; ++v) {
                if (u == v) continue;
                const auto ei = expect.influence.find({u, v});
                const auto ec = expect.connectivity.find({u, v});
                const double wi = ei == expect.influence.end() ? 0.0 : ei->second;
                const double wc = ec == expect.connectivity.end() ? 0.0 : ec->second;
                CHECK(li.graph.edge_weight_or(u, v) == doctest::Approx(wi).epsilon(1e-12));
                CHECK(lc.graph.edge_weight_or(u, v) == doctest::Approx(wc).epsilon(1e-12));
                CHECK(li.graph.has_edge(u, v) == (wi > 0.0));
                CHECK(lc.graph.has_edge(u, v) == (wc > 0.0));
            }
        }
    }
}

TEST_CASE("membership and ties csv round-trip") {
    const SocialLayer layer = two_community_layer();
    const auto dir = std::filesystem::temp_directory_path();
    const auto mpath = dir / "d2d_members_test.csv";
    const auto tpath = dir / "d2d_ties_test.csv";
    write_membership_csv(layer, mpath.string());
    write_ties_csv(layer, tpath.string());
    const auto memberships = read_membership_csv(mpath.string());
    const auto ties = read_ties_csv(tpath.string());
    REQUIRE(memberships.size() == 2);
    CHECK(memberships[0] == std::vector<NodeId>{0, 4});
    CHECK(memberships[1] == std::vector<NodeId>{1, 2, 3});
    REQUIRE(ties.size() == 3);
    CHECK(ties[0].weight == 0.6);
    const SocialLayer back = make_social_layer(5, memberships, ties);
    CHECK(back.tie_graphs[1].edge_weight_or(2, 3) == doctest::Approx(0.5));
    std::filesystem::remove(mpath);
    std::filesystem::remove(tpath);
}

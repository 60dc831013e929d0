#include "doctest.h"

#include <bit>
#include <cmath>
#include <memory>
#include <random>

#include "oracle.hpp"
#include "shapley.hpp"

using namespace d2d;

namespace {

CharacteristicGame majority3() {
    CharacteristicGame g;
    g.player_count = 3;
    g.value = [](std::uint32_t mask) { return std::popcount(mask) >= 2 ? 1.0 : 0.0; };
    return g;
}

CharacteristicGame random_game(std::mt19937_64& rng, std::size_t players) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto table = std::make_shared<std::vector<double>>(1u << players, 0.0);
    for (std::uint32_t mask = 1; mask < table->size(); ++mask) (*table)[mask] = unit(rng) * 5.0;
    CharacteristicGame g;
    g.player_count = players;
    g.value = [table](std::uint32_t mask) { return (*table)[mask]; };
    return g;
}

NeighborhoodModel random_model(std::mt19937_64& rng, std::size_t n) {
    const Graph g = oracle::random_graph(rng, n, 0.5, false);
    std::uniform_real_distribution<double> frac(0.2, 0.9);
    return make_neighborhood_model(g, frac(rng));
}

std::vector<double> random_alpha(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.1, 2.0);
    std::vector<double> a(n);
    for (double& v : a) v = unit(rng);
    return a;
}

Graph complete_graph(std::size_t n) {
    Graph g(n, false);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v, 1.0);
    }
    return g;
}

} // namespace

TEST_CASE("majority game splits evenly") {
    const auto phi = exact_shapley(majority3());
    for (double v : phi) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("additive two-player game pays each player its own value") {
    CharacteristicGame g;
    g.player_count = 2;
    g.value = [](std::uint32_t mask) { return static_cast<double>(std::popcount(mask)); };
    const auto phi = exact_shapley(g);
    CHECK(phi[0] == doctest::Approx(1.0));
    CHECK(phi[1] == doctest::Approx(1.0));
}

TEST_CASE("subset enumeration matches the permutation definition") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t players = 2 + trial % 5;  // up to 6
        const CharacteristicGame g = random_game(rng, players);
        const auto fast = exact_shapley(g);
        const auto slow = oracle::permutation_shapley(g);
        for (std::size_t k = 0; k < players; ++k) {
            CHECK(fast[k] == doctest::Approx(slow[k]).epsilon(1e-10));
        }
        double total = 0.0;
        for (double v : fast) total += v;
        CHECK(total == doctest::Approx(g.value((1u << players) - 1)).epsilon(1e-10));
    }
}

TEST_CASE("player caps and the empty game") {
    CharacteristicGame g;
    g.player_count = kMaxExactPlayers + 1;
    g.value = [](std::uint32_t) { return 0.0; };
    CHECK_THROWS_AS(exact_shapley(g), std::invalid_argument);
    g.player_count = 0;
    CHECK(exact_shapley(g).empty());
}

TEST_CASE("star neighborhood values") {
    // Star on 5 nodes, unit weights, d_fraction 0.5: diameter 2 so d = 1.
    // Leaves reach only the center within d, the center reaches everyone.
    Graph star(5, false);
    for (NodeId leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf, 1.0);
    const NeighborhoodModel m = make_neighborhood_model(star, 0.5);
    CHECK(m.d_value == doctest::Approx(1.0));
    CHECK(m.d_neighbors[0] == std::vector<NodeId>{0, 1, 2, 3, 4});
    CHECK(m.d_neighbors[2] == std::vector<NodeId>{0, 2});
    const auto phi = closed_form_sv(m, std::vector<double>(5, 1.0));
    CHECK(phi[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    for (NodeId leaf = 1; leaf < 5; ++leaf) {
        CHECK(phi[leaf] == doctest::Approx(7.0 / 6.0).epsilon(1e-12));
    }
}

TEST_CASE("closed form matches a direct set-intersection evaluation") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const NeighborhoodModel m = random_model(rng, n);
        const auto alpha = random_alpha(rng, n);
        const auto fast = closed_form_sv(m, alpha);
        const auto slow = oracle::closed_form_direct(m, alpha);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(fast[k] == doctest::Approx(slow[k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("neighborhood model lifted from an influence graph is verbatim") {
    Graph w(3, true);
    w.add_edge(0, 1, 0.4);
    w.add_edge(1, 2, 0.6);
    const InfluenceGraph ig = assemble_influence_graph(std::move(w), {{1}, {2}, {}}, 0.5);
    const NeighborhoodModel m = neighborhood_model(ig);
    CHECK(m.one_hop == ig.one_hop);
    CHECK(m.d_neighbors == ig.d_neighbors);
    CHECK(m.d_value == ig.d_value);
}

TEST_CASE("coverage game's exact values reproduce the closed coverage split") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + trial % 4;  // up to 6 players
        const NeighborhoodModel m = random_model(rng, n);
        const auto alpha = random_alpha(rng, n);
        const auto exact = exact_shapley(indicator_coverage_game(m, alpha));
        const auto closed = coverage_game_sv(m, alpha);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(exact[k] == doctest::Approx(closed[k]).epsilon(1e-10));
        }
    }
}

TEST_CASE("triangle with a saturating threshold pins the three scores apart") {
    // On K3 with d covering the whole graph, the per-node closed form is 1/2,
    // the outside-only indicator game collapses to zero (its grand coalition
    // is worthless), and the all-nodes coverage game pays 1. The three
    // quantities deliberately disagree; each is checked against its own
    // definition.
    // d equals the diameter here; the threshold is inclusive, so every
    // neighborhood is the whole triangle.
    const NeighborhoodModel m = make_neighborhood_model(complete_graph(3), 1.0);
    const std::vector<double> alpha(3, 1.0);
    const auto closed = closed_form_sv(m, alpha);
    const auto surrogate = exact_shapley(indicator_surrogate_game(m, alpha));
    const auto coverage = exact_shapley(indicator_coverage_game(m, alpha));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(closed[k] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(surrogate[k] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(coverage[k] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("probabilistic game wraps coalition_value faithfully") {
    Graph w(3, true);
    w.add_edge(0, 1, 0.4);
    w.add_edge(1, 0, 0.2);
    w.add_edge(1, 2, 0.6);
    w.add_edge(2, 1, 0.5);
    const InfluenceGraph ig = assemble_influence_graph(std::move(w), {{1}, {0, 2}, {1}}, 0.6);
    const std::vector<double> alpha{1.0, 2.0, 3.0};
    const CharacteristicGame game = probabilistic_game(ig, alpha);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        std::vector<char> in_s(3, 0);
        for (NodeId k = 0; k < 3; ++k) in_s[k] = (mask >> k) & 1 ? 1 : 0;
        CHECK(game.value(mask) == doctest::Approx(coalition_value(ig, in_s, alpha)).epsilon(1e-12));
    }
    CHECK(game.value(0) == 0.0);
    const auto phi = exact_shapley(game);
    double total = 0.0;
    for (double v : phi) total += v;
    CHECK(total == doctest::Approx(game.value(7)).epsilon(1e-10));
}

TEST_CASE("offloading power splits community value by shapley share") {
    std::vector<std::vector<NodeId>> memberships{{0, 1, 2}, {3}};
    const SocialLayer social = make_social_layer(4, std::move(memberships), {});
    const std::vector<std::vector<double>> community_sv{{0.5, 0.3, 0.2}, {1.0}};
    const std::vector<double> line_sv{1.8, 0.6};
    const OffloadingPower p = offloading_power(social, community_sv, line_sv);
    CHECK(p.per_member[0][0] == doctest::Approx(0.9));
    CHECK(p.per_member[0][1] == doctest::Approx(0.54));
    CHECK(p.per_member[0][2] == doctest::Approx(0.36));
    CHECK(p.per_ue[3] == doctest::Approx(0.6));
}

TEST_CASE("zero-sum communities split uniformly") {
    std::vector<std::vector<NodeId>> memberships{{0, 1, 2, 3}};
    const SocialLayer social = make_social_layer(4, std::move(memberships), {});
    const std::vector<std::vector<double>> community_sv{{0.0, 0.0, 0.0, 0.0}};
    const std::vector<double> line_sv{2.0};
    const OffloadingPower p = offloading_power(social, community_sv, line_sv);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(p.per_member[0][i] == doctest::Approx(0.5));
    }
}

TEST_CASE("overlapping membership takes the strongest community") {
    // UE 1 sits in both communities; its per-UE power is the larger share.
    std::vector<std::vector<NodeId>> memberships{{0, 1}, {1, 2}};
    const SocialLayer social = make_social_layer(3, std::move(memberships), {});
    const std::vector<std::vector<double>> community_sv{{0.5, 0.5}, {0.25, 0.75}};
    const std::vector<double> line_sv{1.0, 4.0};
    const OffloadingPower p = offloading_power(social, community_sv, line_sv);
    CHECK(p.per_ue[0] == doctest::Approx(0.5));
    CHECK(p.per_ue[1] == doctest::Approx(1.0));  // max(0.5, 0.25 * 4.0)
    CHECK(p.per_ue[2] == doctest::Approx(3.0));
}

TEST_CASE("method names round-trip") {
    for (SeedMethod m : {SeedMethod::sv, SeedMethod::sv_influence, SeedMethod::sv_connectivity,
                         SeedMethod::degree, SeedMethod::betweenness, SeedMethod::closeness}) {
        SeedMethod back;
        REQUIRE(parse_seed_method(seed_method_name(m), back));
        CHECK(back == m);
    }
    SeedMethod out;
    CHECK_FALSE(parse_seed_method("nonsense", out));
}

TEST_CASE("seed selection takes the top member score with smallest-id ties") {
    std::vector<std::vector<NodeId>> memberships{{0, 1, 2}, {3, 4}};
    const SocialLayer social = make_social_layer(5, std::move(memberships), {});
    CentralityReport report;
    report.method = SeedMethod::degree;
    report.member_score = {{0.2, 0.7, 0.7}, {0.1, 0.3}};
    report.sv_social.assign(5, 0.0);
    const auto seeds = select_seeds(report, social);
    REQUIRE(seeds.size() == 2);
    CHECK(seeds[0] == 1);  // 0.7 tie resolved to the smaller id
    CHECK(seeds[1] == 4);
}

TEST_CASE("degenerate line-graph scores fall back to the social value") {
    std::vector<std::vector<NodeId>> memberships{{0, 1, 2}};
    const SocialLayer social = make_social_layer(3, std::move(memberships), {});
    CentralityReport report;
    report.method = SeedMethod::sv_influence;
    report.member_score = {{0.0, 0.0, 0.0}};
    report.sv_social = {0.1, 0.9, 0.2};
    const auto seeds = select_seeds(report, social);
    REQUIRE(seeds.size() == 1);
    CHECK(seeds[0] == 1);
}

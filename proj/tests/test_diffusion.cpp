#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "diffusion.hpp"
#include "oracle.hpp"

using namespace d2d;

namespace {

// One community over everyone, influence weights given per directed edge.
struct Fixture {
    InfluenceGraph ig;
    SocialLayer social;
};

Fixture chain_fixture(double w) {
    // 0 -> 1 -> 2 with weight w in the forward direction only.
    Graph g(3, true);
    g.add_edge(0, 1, w);
    g.add_edge(1, 2, w);
    Fixture f;
    f.ig = assemble_influence_graph(std::move(g), {{1}, {2}, {}}, 1.0);
    f.social = make_social_layer(3, {{0, 1, 2}}, {});
    return f;
}

Fixture pair_fixture(double w01, double w02) {
    // 0 can push to 1 or 2; probabilities follow the weights.
    Graph g(3, true);
    g.add_edge(0, 1, w01);
    g.add_edge(0, 2, w02);
    Fixture f;
    f.ig = assemble_influence_graph(std::move(g), {{1, 2}, {}, {}}, 1.0);
    f.social = make_social_layer(3, {{0, 1, 2}}, {});
    return f;
}

} // namespace

TEST_CASE("certain weights spread one hop per slot") {
    const Fixture f = chain_fixture(1.0);
    DiffusionOptions opts;
    const DiffusionTrace trace = run_diffusion({0}, f.ig, f.social, opts, 42);
    REQUIRE(trace.counts.size() >= 3);
    CHECK(trace.initial_count == 1);
    CHECK(trace.counts[0] == 1);
    CHECK(trace.counts[1] == 2);
    CHECK(trace.counts[2] == 3);
    CHECK(trace.last_change_slot == 2);
    CHECK(trace.delay[0] == 0);
    CHECK(trace.delay[1] == 1);
    CHECK(trace.delay[2] == 2);
    const DiffusionMetrics m = compute_metrics(trace);
    CHECK(m.final_count == 3);
    CHECK(m.mean_speed == doctest::Approx(1.0));
    CHECK(m.delay_histogram.at(0) == 1);
    CHECK(m.delay_histogram.at(1) == 1);
    CHECK(m.delay_histogram.at(2) == 1);
}

TEST_CASE("zero weights never spread and the trace stays flat") {
    const Fixture f = chain_fixture(0.0);
    DiffusionOptions opts;
    opts.quiescence_window = 3;
    const DiffusionTrace trace = run_diffusion({0}, f.ig, f.social, opts, 42);
    CHECK(trace.counts.back() == 1);
    CHECK(trace.last_change_slot == 0);
    CHECK(trace.delay[1] == -1);
    CHECK(trace.delay[2] == -1);
    const DiffusionMetrics m = compute_metrics(trace);
    CHECK(m.final_count == 1);
    CHECK(m.mean_speed == doctest::Approx(0.0));
    // Quiescence cuts the run well before the default slot cap.
    CHECK(trace.counts.size() <= 1 + opts.quiescence_window + 1);
}

TEST_CASE("slot cap stops an unfinished spread") {
    const Fixture f = chain_fixture(1.0);
    DiffusionOptions opts;
    opts.max_slots = 1;
    const DiffusionTrace trace = run_diffusion({0}, f.ig, f.social, opts, 42);
    CHECK(trace.counts.size() == 2);  // slot 0 plus one step
    CHECK(trace.counts.back() == 2);
}

TEST_CASE("eligibility freezes at the slot start") {
    // 0 -> 1 -> 2 certain: in slot 1 UE 1 is not yet a slot-start holder, so
    // 2 cannot be reached before slot 2 regardless of ordering.
    const Fixture f = chain_fixture(1.0);
    DiffusionState state{{std::vector<char>{1, 0, 0}}, 0};
    RngStream rng(7);
    DiffusionOptions opts;
    const auto added1 = step(state, f.ig, f.social, opts, rng);
    REQUIRE(added1.size() == 1);
    CHECK(added1[0].ue == 1);
    CHECK(state.slot == 1);
    const auto added2 = step(state, f.ig, f.social, opts, rng);
    REQUIRE(added2.size() == 1);
    CHECK(added2[0].ue == 2);
}

TEST_CASE("attempt probabilities follow the clamped weights") {
    // With w01 = 0.8 and w02 = 0.4, slot-1 outcomes from seed {0}:
    // pick 1 (2/3) then succeed 0.8, pick 2 (1/3) then succeed 0.4.
    // P(1 gained) = 0.5333, P(2 gained) = 0.1333, P(nothing) = 1/3.
    const Fixture f = pair_fixture(0.8, 0.4);
    int hit1 = 0, hit2 = 0, none = 0;
    const int reps = 4000;
    for (int i = 0; i < reps; ++i) {
        DiffusionState state{{std::vector<char>{1, 0, 0}}, 0};
        RngStream rng(1000 + static_cast<std::uint64_t>(i));
        DiffusionOptions opts;
        const auto added = step(state, f.ig, f.social, opts, rng);
        if (added.empty()) ++none;
        else if (added[0].ue == 1) ++hit1;
        else ++hit2;
    }
    CHECK(static_cast<double>(hit1) / reps == doctest::Approx(2.0 / 3.0 * 0.8).epsilon(0.08));
    CHECK(static_cast<double>(hit2) / reps == doctest::Approx(1.0 / 3.0 * 0.4).epsilon(0.15));
    CHECK(static_cast<double>(none) / reps == doctest::Approx(1.0 - 8.0 / 15.0 - 2.0 / 15.0).epsilon(0.1));
}

TEST_CASE("attempt_all pushes toward every eligible neighbor") {
    const Fixture f = pair_fixture(1.0, 1.0);
    DiffusionState state{{std::vector<char>{1, 0, 0}}, 0};
    RngStream rng(3);
    DiffusionOptions opts;
    opts.attempt_all = true;
    const auto added = step(state, f.ig, f.social, opts, rng);
    CHECK(added.size() == 2);
}

TEST_CASE("relay restriction keeps content inside its community") {
    // Two communities: content 0 belongs to {0, 2}; UE 1 is the only bridge.
    Graph g(3, true);
    g.add_edge(0, 1, 1.0);
    g.add_edge(1, 2, 1.0);
    InfluenceGraph ig = assemble_influence_graph(std::move(g), {{1}, {2}, {}}, 1.0);
    const SocialLayer social = make_social_layer(3, {{0, 2}, {1}}, {});
    DiffusionOptions opts;
    opts.relay_members_only = true;
    const DiffusionTrace restricted = run_diffusion({0, 1}, ig, social, opts, 5);
    // Content 0 cannot traverse non-member 1, so UE 2 never gets it.
    CHECK(restricted.delay[2] == -1);
    DiffusionOptions open;
    const DiffusionTrace relayed = run_diffusion({0, 1}, ig, social, open, 5);
    CHECK(relayed.delay[2] == 2);
}

TEST_CASE("counting needs own-community content") {
    // UE 1 is only in community 1; holding content 0 does not count it.
    Graph g(2, true);
    g.add_edge(0, 1, 1.0);
    InfluenceGraph ig = assemble_influence_graph(std::move(g), {{1}, {}}, 1.0);
    const SocialLayer social = make_social_layer(2, {{0}, {1}}, {});
    DiffusionOptions opts;
    const DiffusionTrace trace = run_diffusion({0, 1}, ig, social, opts, 9);
    // Content 0 spreads to UE 1 but both UEs count once each (own content).
    CHECK(trace.initial_count == 2);
    CHECK(trace.counts.back() == 2);
    CHECK(compute_metrics(trace).final_count == 2);
}

TEST_CASE("per-community counts track member holders") {
    const Fixture f = chain_fixture(1.0);
    DiffusionOptions opts;
    const DiffusionTrace trace = run_diffusion({0}, f.ig, f.social, opts, 12);
    REQUIRE(trace.per_community.size() == trace.counts.size());
    for (std::size_t s = 0; s < trace.counts.size(); ++s) {
        CHECK(trace.per_community[s][0] == trace.counts[s]);
    }
}

TEST_CASE("runs are reproducible by seed") {
    const Fixture f = pair_fixture(0.5, 0.5);
    DiffusionOptions opts;
    const DiffusionTrace a = run_diffusion({0}, f.ig, f.social, opts, 77);
    const DiffusionTrace b = run_diffusion({0}, f.ig, f.social, opts, 77);
    CHECK(a.counts == b.counts);
    CHECK(a.delay == b.delay);
}

TEST_CASE("refresh supplies the slot graph") {
    // The base graph cannot spread at all; the refreshed graph is certain.
    Graph dead(2, true);
    dead.add_edge(0, 1, 0.0);
    InfluenceGraph base = assemble_influence_graph(std::move(dead), {{1}, {}}, 1.0);
    Graph live(2, true);
    live.add_edge(0, 1, 1.0);
    InfluenceGraph alive = assemble_influence_graph(std::move(live), {{1}, {}}, 1.0);
    const SocialLayer social = make_social_layer(2, {{0, 1}}, {});
    DiffusionOptions opts;
    opts.refresh = [&](std::uint32_t) { return &alive; };
    const DiffusionTrace trace = run_diffusion({0}, base, social, opts, 21);
    CHECK(trace.delay[1] == 1);
    DiffusionOptions null_refresh;
    null_refresh.refresh = [](std::uint32_t) -> const InfluenceGraph* { return nullptr; };
    null_refresh.quiescence_window = 2;
    const DiffusionTrace flat = run_diffusion({0}, base, social, null_refresh, 21);
    CHECK(flat.delay[1] == -1);
}

TEST_CASE("final counts agree in distribution with an independent simulator") {
    // Same dynamics, fresh implementation, different RNG: compare final-count
    // samples via a two-sample KS test at the 1% level.
    std::mt19937_64 seed_rng(2024);
    const Graph base = oracle::random_graph(seed_rng, 10, 0.35, false);
    Graph w(10, true);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<NodeId>> one_hop(10);
    for (NodeId u = 0; u < 10; ++u) {
        for (const Neighbor& nb : base.neighbors(u)) {
            one_hop[u].push_back(nb.node);
            w.add_edge(u, nb.node, 0.15 + 0.5 * unit(seed_rng));
        }
    }
    const InfluenceGraph ig = assemble_influence_graph(std::move(w), std::move(one_hop), 1.0);
    const SocialLayer social = make_social_layer(10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, {});
    const std::vector<NodeId> seeds{0, 5};
    DiffusionOptions opts;
    opts.max_slots = 40;
    opts.quiescence_window = 5;
    const int reps = 1000;
    std::vector<double> mine, theirs;
    std::mt19937_64 naive_rng(99);
    for (int i = 0; i < reps; ++i) {
        const DiffusionTrace t = run_diffusion(seeds, ig, social, opts, 5000 + static_cast<std::uint64_t>(i));
        mine.push_back(static_cast<double>(compute_metrics(t).final_count));
        theirs.push_back(static_cast<double>(oracle::naive_final_count(ig, social, seeds, 40, 5, naive_rng)));
    }
    const double d = oracle::ks_statistic(mine, theirs);
    // 1% critical value for two samples of 1000: 1.628 * sqrt(2/1000).
    CHECK(d < 1.628 * std::sqrt(2.0 / reps));
    double mean_mine = 0.0, mean_theirs = 0.0;
    for (int i = 0; i < reps; ++i) {
        mean_mine += mine[i];
        mean_theirs += theirs[i];
    }
    CHECK(mean_mine / reps == doctest::Approx(mean_theirs / reps).epsilon(0.05));
}

TEST_CASE("trace and delay csv outputs are well formed") {
    const Fixture f = chain_fixture(1.0);
    DiffusionOptions opts;
    std::vector<DiffusionTrace> traces{run_diffusion({0}, f.ig, f.social, opts, 1),
                                       run_diffusion({0}, f.ig, f.social, opts, 2)};
    const auto dir = std::filesystem::temp_directory_path();
    const auto tpath = dir / "d2d_trace_test.csv";
    const auto dpath = dir / "d2d_delay_test.csv";
    write_trace_csv(traces, tpath.string());
    write_delay_csv(traces, dpath.string());
    std::ifstream tin(tpath);
    std::string header;
    std::getline(tin, header);
    CHECK(header.find("slot") != std::string::npos);
    std::size_t rows = 0;
    for (std::string line; std::getline(tin, line);) ++rows;
    CHECK(rows == traces[0].counts.size() + traces[1].counts.size());
    std::ifstream din(dpath);
    std::getline(din, header);
    CHECK(header.find("delay") != std::string::npos);
    std::size_t drows = 0;
    for (std::string line; std::getline(din, line);) ++drows;
    CHECK(drows == 6);  // two runs, three UEs each
    std::filesystem::remove(tpath);
    std::filesystem::remove(dpath);
}

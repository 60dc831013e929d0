#include "scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "csv.hpp"
#include "rng.hpp"

namespace d2d {

std::uint64_t scenario_seed(const ScenarioConfig& cfg, std::uint32_t scenario_index) {
    const std::uint64_t axis_seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(cfg.sweep_axis));
    return derive_seed(axis_seed, seedtag::scenario_base + scenario_index);
}

ScenarioConfig apply_point(const ScenarioConfig& cfg, SweepAxis axis, double value) {
    ScenarioConfig out = cfg;
    switch (axis) {
    case SweepAxis::d_fraction:
        out.d_fraction = value;
        break;
    case SweepAxis::n_ues:
        out.mean_ues_per_cluster = value / static_cast<double>(cfg.n_clusters);
        break;
    case SweepAxis::mobility_speed:
        out.mobility_speed = value;
        out.mobility_enabled = true;
        break;
    }
    return out;
}

namespace {

std::vector<std::vector<NodeId>> random_assignment(std::size_t n, std::uint32_t communities,
                                                   std::uint64_t seed) {
    RngStream rng(seed);
    std::vector<std::vector<NodeId>> members(communities);
    for (NodeId ue = 0; ue < n; ++ue) {
        const auto pick = std::min<std::uint32_t>(
            communities - 1, static_cast<std::uint32_t>(rng.uniform() * static_cast<double>(communities)));
        members[pick].push_back(ue);
    }
    // Every community must end up populated; move surplus members over.
    for (std::uint32_t l = 0; l < communities; ++l) {
        while (members[l].empty()) {
            std::uint32_t donor = 0;
            std::size_t donor_size = 0;
            for (std::uint32_t k = 0; k < communities; ++k) {
                if (members[k].size() > donor_size) {
                    donor_size = members[k].size();
                    donor = k;
                }
            }
            if (donor_size < 2)
                throw std::runtime_error("fewer UEs than communities; cannot populate every community");
            members[l].push_back(members[donor].back());
            members[donor].pop_back();
        }
    }
    return members;
}

std::vector<std::string> d2d_graph_warnings(const Graph& g) {
    std::vector<std::string> out;
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) {
        out.push_back("d2d graph has no edges");
        return out;
    }
    std::vector<char> seen(n, 0);
    std::size_t components = 0, largest = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        std::size_t size = 0;
        std::vector<NodeId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (const Neighbor& nb : g.neighbors(u)) {
                if (!seen[nb.node]) {
                    seen[nb.node] = 1;
                    stack.push_back(nb.node);
                }
            }
        }
        largest = std::max(largest, size);
    }
    if (components > 1) {
        out.push_back("d2d graph is disconnected: " + std::to_string(components) + " components, largest " +
                      std::to_string(largest) + " of " + std::to_string(n));
    }
    return out;
}

std::vector<double> make_alpha(const ScenarioConfig& cfg, std::size_t n, std::uint64_t seed) {
    std::vector<double> alpha(n, 1.0);
    if (cfg.alpha_mode == AlphaMode::random) {
        RngStream rng(seed);
        for (double& a : alpha) a = rng.uniform_pos();
    }
    return alpha;
}

// Community tie graph reindexed over its member list.
Graph community_local_graph(const SocialLayer& social, std::uint32_t l) {
    const auto& mem = social.members[l];
    Graph g(mem.size(), false);
    for (const Edge& e : social.tie_graphs[l].edges()) {
        const auto a = std::lower_bound(mem.begin(), mem.end(), e.src) - mem.begin();
        const auto b = std::lower_bound(mem.begin(), mem.end(), e.dst) - mem.begin();
        g.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b), e.weight);
    }
    return g;
}

} // namespace

ScenarioGraphs build_graphs(const ScenarioConfig& cfg, const Topology& topo, const SocialLayer& social,
                            const std::vector<double>& alpha, std::uint64_t fading_seed,
                            std::vector<std::string>* warnings) {
    ScenarioGraphs g;
    g.links = build_link_table(topo, cfg.radio, fading_seed);
    g.d2d = build_d2d_graph(g.links, cfg.radio);
    if (warnings) {
        for (std::string& w : d2d_graph_warnings(g.d2d)) warnings->push_back(std::move(w));
    }
    g.ig = build_influence_graph(g.d2d, social, cfg.d_fraction, cfg.distance_transform);
    g.line_influence = build_line_graph(social, g.d2d, LineKind::influence);
    g.line_connectivity = build_line_graph(social, g.d2d, LineKind::connectivity);

    g.sv_d2d = closed_form_sv(neighborhood_model(g.ig), alpha);

    const std::uint32_t L = social.community_count();
    g.social_sv.resize(L);
    for (std::uint32_t l = 0; l < L; ++l) {
        const auto& mem = social.members[l];
        std::vector<double> local_alpha(mem.size());
        for (std::size_t i = 0; i < mem.size(); ++i) local_alpha[i] = alpha[mem[i]];
        g.social_sv[l] =
            closed_form_sv(make_neighborhood_model(community_local_graph(social, l), cfg.d_fraction), local_alpha);
    }

    std::vector<double> line_alpha(L, 0.0);
    for (std::uint32_t l = 0; l < L; ++l) {
        for (NodeId ue : social.members[l]) line_alpha[l] += alpha[ue];
    }
    g.line_sv_influence =
        closed_form_sv(make_neighborhood_model(g.line_influence.graph, cfg.d_fraction), line_alpha);
    g.line_sv_connectivity =
        closed_form_sv(make_neighborhood_model(g.line_connectivity.graph, cfg.d_fraction), line_alpha);
    g.power_influence = offloading_power(social, g.social_sv, g.line_sv_influence);
    g.power_connectivity = offloading_power(social, g.social_sv, g.line_sv_connectivity);

    g.degree_c = classical_centrality(g.d2d, Centrality::degree);
    g.betweenness_c = classical_centrality(g.d2d, Centrality::betweenness);
    g.closeness_c = classical_centrality(g.d2d, Centrality::closeness);
    return g;
}

BuiltScenario build_scenario(const ScenarioConfig& cfg, std::uint64_t scen_seed) {
    BuiltScenario b;
    if (cfg.assignment_mode == AssignmentMode::from_file) {
        std::vector<std::vector<NodeId>> memberships = read_membership_csv(cfg.membership_file);
        if (memberships.size() < cfg.community_count) memberships.resize(cfg.community_count);
        NodeId max_id = 0;
        for (const auto& m : memberships) {
            for (NodeId ue : m) max_id = std::max(max_id, ue);
        }
        const std::size_t n = static_cast<std::size_t>(max_id) + 1;
        b.topo = generate_topology_fixed(n, cfg.n_clusters, cfg.area_radius, cfg.cluster_spread,
                                         derive_seed(scen_seed, seedtag::topology));
        if (!cfg.ties_file.empty()) {
            b.social = make_social_layer(n, std::move(memberships), read_ties_csv(cfg.ties_file));
        } else {
            b.social = sample_social_layer(n, std::move(memberships), cfg.tie_density,
                                           derive_seed(scen_seed, seedtag::social));
        }
    } else {
        b.topo = generate_topology(cfg.n_clusters, cfg.mean_ues_per_cluster, cfg.area_radius, cfg.cluster_spread,
                                   derive_seed(scen_seed, seedtag::topology));
        const std::size_t n = b.topo.ue_count();
        b.social = sample_social_layer(n, random_assignment(n, cfg.community_count,
                                                            derive_seed(scen_seed, seedtag::assignment)),
                                       cfg.tie_density, derive_seed(scen_seed, seedtag::social));
    }
    const std::vector<std::string> problems = validate_social_layer(b.social);
    if (!problems.empty()) throw std::runtime_error("social layer invalid: " + problems.front());
    b.alpha = make_alpha(cfg, b.topo.ue_count(), derive_seed(scen_seed, seedtag::alpha));
    b.graphs = build_graphs(cfg, b.topo, b.social, b.alpha, derive_seed(scen_seed, seedtag::fading), &b.warnings);
    return b;
}

CentralityReport build_report(const SocialLayer& social, const ScenarioGraphs& g, SeedMethod method) {
    CentralityReport r;
    r.method = method;
    const std::size_t n = social.ue_count();
    const std::uint32_t L = social.community_count();
    const bool connectivity = method == SeedMethod::sv_connectivity;
    const OffloadingPower& power = connectivity ? g.power_connectivity : g.power_influence;
    const std::vector<double>& line_sv = connectivity ? g.line_sv_connectivity : g.line_sv_influence;

    r.sv_d2d = g.sv_d2d;
    r.offloading_power = power.per_ue;
    r.sv_social.assign(n, 0.0);
    r.community_sv.assign(n, 0.0);
    std::vector<double> best_power(n, -1.0);
    for (std::uint32_t l = 0; l < L; ++l) {
        const auto& mem = social.members[l];
        for (std::size_t i = 0; i < mem.size(); ++i) {
            if (power.per_member[l][i] > best_power[mem[i]]) {
                best_power[mem[i]] = power.per_member[l][i];
                r.sv_social[mem[i]] = g.social_sv[l][i];
                r.community_sv[mem[i]] = line_sv[l];
            }
        }
    }

    const std::vector<double>* flat = nullptr;
    switch (method) {
    case SeedMethod::sv: flat = &g.sv_d2d; break;
    case SeedMethod::degree: flat = &g.degree_c; break;
    case SeedMethod::betweenness: flat = &g.betweenness_c; break;
    case SeedMethod::closeness: flat = &g.closeness_c; break;
    case SeedMethod::sv_influence:
    case SeedMethod::sv_connectivity: break;
    }
    r.member_score.resize(L);
    for (std::uint32_t l = 0; l < L; ++l) {
        const auto& mem = social.members[l];
        r.member_score[l].resize(mem.size());
        for (std::size_t i = 0; i < mem.size(); ++i)
            r.member_score[l][i] = flat ? (*flat)[mem[i]] : power.per_member[l][i];
    }
    r.score = flat ? *flat : power.per_ue;
    return r;
}

void write_centrality_csv(const BuiltScenario& built, const std::vector<SeedMethod>& methods,
                          const std::string& path) {
    std::ofstream out = open_output(path);
    out << "ue_id,community_id,method,score,is_seed\n";
    for (SeedMethod method : methods) {
        const CentralityReport report = build_report(built.social, built.graphs, method);
        const std::vector<NodeId> seeds = select_seeds(report, built.social);
        for (std::uint32_t l = 0; l < built.social.community_count(); ++l) {
            const auto& mem = built.social.members[l];
            for (std::size_t i = 0; i < mem.size(); ++i) {
                out << mem[i] << ',' << l << ',' << seed_method_name(method) << ','
                    << format_double(report.member_score[l][i]) << ',' << (seeds[l] == mem[i] ? 1 : 0) << '\n';
            }
        }
    }
}

void write_seeds_csv(const BuiltScenario& built, const std::vector<SeedMethod>& methods, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "method,community_id,ue_id\n";
    for (SeedMethod method : methods) {
        const std::vector<NodeId> seeds =
            select_seeds(build_report(built.social, built.graphs, method), built.social);
        for (std::uint32_t l = 0; l < seeds.size(); ++l) {
            out << seed_method_name(method) << ',' << l << ',' << seeds[l] << '\n';
        }
    }
}

DiffusionOptions diffusion_options(const ScenarioConfig& cfg) {
    DiffusionOptions opts;
    opts.max_slots = cfg.max_slots;
    opts.quiescence_window = cfg.quiescence_window;
    opts.attempt_all = cfg.cascade == CascadeMode::attempt_all;
    opts.relay_members_only = cfg.relay == RelayMode::members_only;
    return opts;
}

namespace {

DiffusionTrace run_one(const ScenarioConfig& cfg, const BuiltScenario& b, const std::vector<NodeId>& seeds,
                       std::uint64_t run_seed) {
    DiffusionOptions opts = diffusion_options(cfg);
    std::shared_ptr<InfluenceGraph> holder;
    if (cfg.fading_refresh == FadingRefresh::slot) {
        holder = std::make_shared<InfluenceGraph>();
        opts.refresh = [&cfg, &b, holder, run_seed](std::uint32_t slot) -> const InfluenceGraph* {
            const LinkTable links =
                build_link_table(b.topo, cfg.radio, derive_seed(run_seed, seedtag::slot_fading + slot));
            *holder = build_influence_graph(build_d2d_graph(links, cfg.radio), b.social, cfg.d_fraction,
                                            cfg.distance_transform);
            return holder.get();
        };
    }
    return run_diffusion(seeds, b.graphs.ig, b.social, opts, run_seed);
}

void parallel_for(std::size_t task_count, int threads, const std::function<void(std::size_t)>& fn) {
    if (task_count == 0) return;
    unsigned pool_size = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
    if (pool_size == 0) pool_size = 1;
    pool_size = static_cast<unsigned>(std::min<std::size_t>(pool_size, task_count));
    if (pool_size <= 1) {
        for (std::size_t i = 0; i < task_count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (unsigned t = 0; t < pool_size; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= task_count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

ExperimentResult run_points(const ScenarioConfig& cfg, const std::vector<double>& points, int threads,
                            bool keep_traces) {
    const std::vector<std::string> problems = validate_config(cfg);
    if (!problems.empty()) throw std::invalid_argument("invalid config: " + problems.front());
    ExperimentResult res;
    res.cfg = cfg;
    res.axis = cfg.sweep_axis;
    res.points = points;
    const std::size_t P = points.size();
    const std::size_t S = cfg.scenarios;
    const std::size_t M = cfg.methods.size();
    const std::size_t R = cfg.runs_per_scenario;
    const std::size_t E = cfg.n_epochs;

    std::vector<ScenarioConfig> point_cfgs(P);
    for (std::size_t p = 0; p < P; ++p) point_cfgs[p] = apply_point(cfg, cfg.sweep_axis, points[p]);

    std::vector<BuiltScenario> built(P * S);
    parallel_for(P * S, threads, [&](std::size_t i) {
        const std::size_t p = i / S, s = i % S;
        built[i] = build_scenario(point_cfgs[p], scenario_seed(cfg, static_cast<std::uint32_t>(s)));
    });
    for (std::size_t p = 0; p < P; ++p) {
        for (std::size_t s = 0; s < S; ++s) {
            for (const std::string& w : built[p * S + s].warnings) {
                res.warnings.push_back("point " + format_double(points[p]) + " scenario " + std::to_string(s) +
                                       ": " + w);
            }
            const BuiltScenario& b = built[p * S + s];
            for (NodeId ue = 0; ue < b.topo.ue_count(); ++ue) {
                res.score_rows.push_back(ScoreRow{static_cast<std::uint32_t>(p), points[p],
                                                  static_cast<std::uint32_t>(s), ue, b.graphs.sv_d2d[ue],
                                                  b.graphs.power_influence.per_ue[ue],
                                                  b.graphs.power_connectivity.per_ue[ue]});
            }
        }
    }

    res.rows.assign(P * S * M * R, RunRow{});
    const bool want_traces = keep_traces && P > 0;
    if (want_traces) res.traces.assign(S * M * R, DiffusionTrace{});
    parallel_for(P * S * M, threads, [&](std::size_t t) {
        const std::size_t p = t / (S * M);
        const std::size_t s = (t % (S * M)) / M;
        const std::size_t m = t % M;
        const BuiltScenario& b = built[p * S + s];
        const std::vector<NodeId> seeds =
            select_seeds(build_report(b.social, b.graphs, cfg.methods[m]), b.social);
        const std::uint64_t scen_seed = scenario_seed(cfg, static_cast<std::uint32_t>(s));
        for (std::size_t r = 0; r < R; ++r) {
            const std::uint64_t run_seed = derive_seed(scen_seed, seedtag::run_base + r);
            const DiffusionTrace trace = run_one(point_cfgs[p], b, seeds, run_seed);
            const DiffusionMetrics metrics = compute_metrics(trace);
            RunRow row;
            row.point_index = static_cast<std::uint32_t>(p);
            row.point_value = points[p];
            row.scenario_index = static_cast<std::uint32_t>(s);
            row.run_index = static_cast<std::uint32_t>(r);
            row.method = cfg.methods[m];
            row.final_count = metrics.final_count;
            row.mean_speed = metrics.mean_speed;
            row.last_change_slot = trace.last_change_slot;
            row.delay_histogram = metrics.delay_histogram;
            res.rows[((p * S + s) * M + m) * R + r] = std::move(row);
            if (want_traces && p == 0) res.traces[(s * M + m) * R + r] = trace;
        }
    });

    const bool mobility = cfg.mobility_enabled || cfg.sweep_axis == SweepAxis::mobility_speed;
    if (mobility) {
        res.mobility_rows.assign(P * S * R * E, MobilityRow{});
        parallel_for(P * S, threads, [&](std::size_t t) {
            const std::size_t p = t / S, s = t % S;
            const BuiltScenario& b = built[p * S + s];
            const SeedMethod method = cfg.methods.front();
            const std::vector<NodeId> initial =
                select_seeds(build_report(b.social, b.graphs, method), b.social);
            const std::vector<double> speeds(b.topo.ue_count(), point_cfgs[p].mobility_speed);
            const std::uint64_t mob_root =
                derive_seed(scenario_seed(cfg, static_cast<std::uint32_t>(s)), seedtag::mobility_diffusion);
            for (std::size_t r = 0; r < R; ++r) {
                const MobilityRunResult mr =
                    mobility_run(point_cfgs[p], b.topo, b.social, b.alpha, b.graphs, speeds, initial, method,
                                 cfg.mobility_policy, derive_seed(mob_root, r));
                for (std::size_t e = 0; e < E; ++e) {
                    MobilityRow row;
                    row.point_index = static_cast<std::uint32_t>(p);
                    row.point_value = points[p];
                    row.scenario_index = static_cast<std::uint32_t>(s);
                    row.run_index = static_cast<std::uint32_t>(r);
                    row.epoch = static_cast<std::uint32_t>(e + 1);
                    row.final_keep = mr.final_keep[e];
                    row.final_reselect = mr.final_reselect[e];
                    res.mobility_rows[((p * S + s) * R + r) * E + e] = row;
                }
            }
        });
    }
    return res;
}

} // namespace

MobilityRunResult mobility_run(const ScenarioConfig& cfg, const Topology& start, const SocialLayer& social,
                               const std::vector<double>& alpha, const ScenarioGraphs& base_graphs,
                               const std::vector<double>& speeds, const std::vector<NodeId>& initial_seeds,
                               SeedMethod method, MobilityPolicy requested, std::uint64_t rng_seed) {
    const std::size_t n = start.ue_count();
    if (speeds.size() != n) throw std::invalid_argument("mobility_run: one speed per UE required");
    if (cfg.epoch_slots < 1 || cfg.n_epochs < 1)
        throw std::invalid_argument("mobility_run: epochs and epoch_slots must be at least 1");
    const std::uint32_t L = social.community_count();
    const bool frozen = std::all_of(speeds.begin(), speeds.end(), [](double v) { return v == 0.0; });
    const double epoch_duration = static_cast<double>(cfg.epoch_slots) * cfg.radio.slot_duration;

    // Mixing weight toward the community drift: sqrt of the UE's mean tie
    // strength in its first community, so pairwise direction correlation
    // tracks tie weight.
    std::vector<double> mix(n, 0.0);
    std::vector<std::uint32_t> drift_of(n, 0);
    for (NodeId ue = 0; ue < n; ++ue) {
        if (social.communities_of[ue].empty()) continue;
        const std::uint32_t l = social.communities_of[ue].front();
        drift_of[ue] = l;
        const auto& ties = social.tie_graphs[l].neighbors(ue);
        if (!ties.empty()) {
            double sum = 0.0;
            for (const Neighbor& t : ties) sum += t.weight;
            mix[ue] = std::sqrt(clamp01(sum / static_cast<double>(ties.size())));
        }
    }

    DiffusionOptions opts = diffusion_options(cfg);
    opts.max_slots = opts.max_slots > 0 ? std::min(opts.max_slots, cfg.epoch_slots) : cfg.epoch_slots;

    Topology topo = start;
    MobilityRunResult out;
    for (std::uint32_t e = 1; e <= cfg.n_epochs; ++e) {
        ScenarioGraphs epoch_graphs;
        const ScenarioGraphs* graphs = &base_graphs;
        if (!frozen) {
            RngStream walk(derive_seed(rng_seed, 3ull * e));
            std::vector<double> drift_x(L), drift_y(L);
            for (std::uint32_t l = 0; l < L; ++l) {
                drift_x[l] = walk.gaussian(0.0, 1.0);
                drift_y[l] = walk.gaussian(0.0, 1.0);
            }
            for (NodeId ue = 0; ue < n; ++ue) {
                const double ex = walk.gaussian(0.0, 1.0);
                const double ey = walk.gaussian(0.0, 1.0);
                const double lam = mix[ue];
                const double ortho = std::sqrt(std::max(0.0, 1.0 - lam * lam));
                const double vx = lam * drift_x[drift_of[ue]] + ortho * ex;
                const double vy = lam * drift_y[drift_of[ue]] + ortho * ey;
                const double norm = std::sqrt(vx * vx + vy * vy);
                if (norm == 0.0 || speeds[ue] == 0.0) continue;
                topo.x[ue] += speeds[ue] * epoch_duration * vx / norm;
                topo.y[ue] += speeds[ue] * epoch_duration * vy / norm;
                const double radial = std::sqrt(topo.x[ue] * topo.x[ue] + topo.y[ue] * topo.y[ue]);
                if (radial > topo.area_radius && radial > 0.0) {
                    topo.x[ue] *= topo.area_radius / radial;
                    topo.y[ue] *= topo.area_radius / radial;
                }
            }
            epoch_graphs = build_graphs(cfg, topo, social, alpha, derive_seed(rng_seed, 3ull * e + 1), nullptr);
            graphs = &epoch_graphs;
        }
        const std::vector<NodeId> reselected = select_seeds(build_report(social, *graphs, method), social);
        const std::uint64_t diff_seed = derive_seed(rng_seed, 3ull * e + 2);
        const DiffusionTrace keep = run_diffusion(initial_seeds, graphs->ig, social, opts, diff_seed);
        const DiffusionTrace res = run_diffusion(reselected, graphs->ig, social, opts, diff_seed);
        out.final_keep.push_back(keep.counts.back());
        out.final_reselect.push_back(res.counts.back());
        out.traces.push_back(requested == MobilityPolicy::keep_initial_seeds ? keep : res);
    }
    return out;
}

ExperimentResult run_scenario(const ScenarioConfig& cfg, int threads, bool keep_traces) {
    double value = cfg.d_fraction;
    switch (cfg.sweep_axis) {
    case SweepAxis::d_fraction: value = cfg.d_fraction; break;
    case SweepAxis::n_ues: value = static_cast<double>(cfg.n_clusters) * cfg.mean_ues_per_cluster; break;
    case SweepAxis::mobility_speed: value = cfg.mobility_speed; break;
    }
    return run_points(cfg, {value}, threads, keep_traces);
}

ExperimentResult run_sweep(const ScenarioConfig& cfg, int threads) {
    if (cfg.sweep_points.empty()) throw std::invalid_argument("sweep requires non-empty sweep_points");
    return run_points(cfg, cfg.sweep_points, threads, false);
}

void generate_artifacts(const ScenarioConfig& cfg, const std::string& out_dir) {
    const std::vector<std::string> problems = validate_config(cfg);
    if (!problems.empty()) throw std::invalid_argument("invalid config: " + problems.front());
    std::filesystem::create_directories(out_dir);
    const BuiltScenario b = build_scenario(cfg, scenario_seed(cfg, 0));
    const std::filesystem::path dir(out_dir);
    write_topology_csv(b.topo, (dir / "topology.csv").string());
    write_membership_csv(b.social, (dir / "membership.csv").string());
    write_ties_csv(b.social, (dir / "ties.csv").string());
    write_link_table_csv(b.graphs.links, (dir / "links.csv").string());
    write_edge_csv(b.graphs.d2d, (dir / "d2d_edges.csv").string());
    write_edge_csv(b.graphs.ig.g, (dir / "influence_edges.csv").string());
}

} // namespace d2d

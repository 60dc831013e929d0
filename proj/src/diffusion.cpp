#include "diffusion.hpp"

#include <stdexcept>

#include "csv.hpp"

namespace d2d {

std::vector<NewHolder> step(DiffusionState& state, const InfluenceGraph& ig, const SocialLayer& social,
                            const DiffusionOptions& opts, RngStream& rng) {
    const std::size_t n = ig.ue_count();
    const std::vector<std::vector<char>> snapshot = state.holds;
    std::vector<NewHolder> added;
    std::vector<NodeId> targets;
    std::vector<double> weights;
    for (std::uint32_t c = 0; c < snapshot.size(); ++c) {
        for (NodeId m = 0; m < n; ++m) {
            if (!snapshot[c][m]) continue;
            targets.clear();
            weights.clear();
            double total = 0.0;
            for (NodeId nb : ig.one_hop[m]) {
                if (snapshot[c][nb]) continue;
                if (opts.relay_members_only && !social.is_member(c, nb)) continue;
                const double w = clamp01(ig.weight(m, nb));
                targets.push_back(nb);
                weights.push_back(w);
                total += w;
            }
            if (opts.attempt_all) {
                for (std::size_t i = 0; i < targets.size(); ++i) {
                    if (weights[i] > 0.0 && rng.bernoulli(weights[i]) && !state.holds[c][targets[i]]) {
                        state.holds[c][targets[i]] = 1;
                        added.push_back(NewHolder{c, targets[i]});
                    }
                }
            } else if (total > 0.0) {
                const std::uint32_t pick =
                    rng.pick_weighted(weights.data(), static_cast<std::uint32_t>(weights.size()), total);
                if (rng.bernoulli(weights[pick]) && !state.holds[c][targets[pick]]) {
                    state.holds[c][targets[pick]] = 1;
                    added.push_back(NewHolder{c, targets[pick]});
                }
            }
        }
    }
    ++state.slot;
    return added;
}

DiffusionTrace run_diffusion(const std::vector<NodeId>& seeds, const InfluenceGraph& ig,
                             const SocialLayer& social, const DiffusionOptions& opts, std::uint64_t rng_seed) {
    const std::size_t n = ig.ue_count();
    const std::uint32_t L = social.community_count();
    if (seeds.size() != L) throw std::invalid_argument("need exactly one seed per community");
    if (opts.quiescence_window < 1) throw std::invalid_argument("quiescence_window must be at least 1");
    const std::uint32_t max_slots = opts.max_slots > 0 ? opts.max_slots : static_cast<std::uint32_t>(10 * n);

    DiffusionState state;
    state.holds.assign(L, std::vector<char>(n, 0));
    DiffusionTrace trace;
    trace.delay.assign(n, -1);
    std::vector<char> counted(n, 0);
    std::vector<std::uint32_t> percom(L, 0);
    std::uint32_t total = 0;
    for (std::uint32_t c = 0; c < L; ++c) {
        const NodeId s = seeds[c];
        if (s >= n) throw std::invalid_argument("seed id out of range");
        state.holds[c][s] = 1;
        if (social.is_member(c, s)) {
            ++percom[c];
            if (!counted[s]) {
                counted[s] = 1;
                trace.delay[s] = 0;
                ++total;
            }
        }
    }
    trace.initial_count = total;
    trace.counts.push_back(total);
    trace.per_community.push_back(percom);

    RngStream rng(rng_seed);
    std::uint32_t idle_streak = 0;
    for (std::uint32_t slot = 1; slot <= max_slots && idle_streak < opts.quiescence_window; ++slot) {
        const InfluenceGraph* cur = &ig;
        if (opts.refresh) {
            const InfluenceGraph* fresh = opts.refresh(slot);
            if (fresh) cur = fresh;
        }
        const std::vector<NewHolder> added = step(state, *cur, social, opts, rng);
        for (const NewHolder& h : added) {
            if (!social.is_member(h.community, h.ue)) continue;
            ++percom[h.community];
            if (!counted[h.ue]) {
                counted[h.ue] = 1;
                trace.delay[h.ue] = static_cast<std::int64_t>(slot);
                ++total;
            }
        }
        if (total > trace.counts.back()) trace.last_change_slot = slot;
        trace.counts.push_back(total);
        trace.per_community.push_back(percom);
        idle_streak = added.empty() ? idle_streak + 1 : 0;
    }
    return trace;
}

DiffusionMetrics compute_metrics(const DiffusionTrace& trace) {
    if (trace.counts.empty()) throw std::invalid_argument("empty trace");
    DiffusionMetrics m;
    m.final_count = trace.counts.back();
    m.mean_speed = trace.last_change_slot > 0
                       ? (static_cast<double>(m.final_count) - static_cast<double>(trace.initial_count)) /
                             static_cast<double>(trace.last_change_slot)
                       : 0.0;
    for (std::int64_t d : trace.delay) {
        if (d >= 0) ++m.delay_histogram[static_cast<std::uint32_t>(d)];
    }
    return m;
}

void write_trace_csv(const std::vector<DiffusionTrace>& traces, const std::string& path) {
    std::ofstream out = open_output(path);
    const std::size_t L = traces.empty() ? 0 : traces.front().per_community.front().size();
    out << "run_id,slot,count_total";
    for (std::size_t c = 0; c < L; ++c) out << ",count_c" << c;
    out << '\n';
    for (std::size_t r = 0; r < traces.size(); ++r) {
        const DiffusionTrace& t = traces[r];
        for (std::size_t slot = 0; slot < t.counts.size(); ++slot) {
            out << r << ',' << slot << ',' << t.counts[slot];
            for (std::uint32_t c : t.per_community[slot]) out << ',' << c;
            out << '\n';
        }
    }
}

void write_delay_csv(const std::vector<DiffusionTrace>& traces, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "run_id,ue_id,delay_slots\n";
    for (std::size_t r = 0; r < traces.size(); ++r) {
        const std::vector<std::int64_t>& delay = traces[r].delay;
        for (std::size_t ue = 0; ue < delay.size(); ++ue) {
            if (delay[ue] >= 0) out << r << ',' << ue << ',' << delay[ue] << '\n';
        }
    }
}

} // namespace d2d

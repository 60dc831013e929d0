#include "radio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "csv.hpp"
#include "rng.hpp"

namespace d2d {

std::vector<std::string> validate_radio_params(const RadioParams& p) {
    std::vector<std::string> out;
    auto positive = [&](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) out.push_back(std::string(name) + " must be positive");
    };
    positive(p.bandwidth_per_rb, "bandwidth_per_rb");
    positive(p.carrier_freq, "carrier_freq");
    positive(p.tx_power, "tx_power");
    positive(p.noise_psd, "noise_psd");
    positive(p.pathloss_exponent, "pathloss_exponent");
    positive(p.packet_bits, "packet_bits");
    positive(p.slot_duration, "slot_duration");
    if (!(p.target_ber > 0.0 && p.target_ber < 0.2))
        out.push_back("target_ber must lie in (0, 0.2)");
    if (p.rb_count == 0) out.push_back("rb_count must be positive");
    if (p.log_base != 2) out.push_back("log_base must be 2 (rates are in bits)");
    return out;
}

double ber_gap(const RadioParams& p) { return -1.5 / std::log(5.0 * p.target_ber); }

double Topology::distance(std::size_t a, std::size_t b) const {
    const double dx = x[a] - x[b];
    const double dy = y[a] - y[b];
    return std::sqrt(dx * dx + dy * dy);
}

namespace {

// Projects (px, py) back onto the disc of radius r when it falls outside.
void clip_to_disc(double& px, double& py, double r) {
    const double norm = std::sqrt(px * px + py * py);
    if (norm > r && norm > 0.0) {
        px *= r / norm;
        py *= r / norm;
    }
}

} // namespace

Topology generate_topology(std::uint32_t n_clusters, double mean_ues_per_cluster, double area_radius,
                           double cluster_spread, std::uint64_t rng_seed) {
    if (n_clusters < 1 || mean_ues_per_cluster < 1.0)
        throw std::invalid_argument("topology needs at least one cluster and a mean of at least one UE");
    if (!(area_radius > 0.0) || cluster_spread < 0.0)
        throw std::invalid_argument("area_radius must be positive and cluster_spread non-negative");
    RngStream rng(rng_seed);
    Topology topo;
    topo.area_radius = area_radius;
    for (;;) {
        topo.center_x.clear();
        topo.center_y.clear();
        topo.x.clear();
        topo.y.clear();
        for (std::uint32_t c = 0; c < n_clusters; ++c) {
            const double r = area_radius * std::sqrt(rng.uniform());
            const double theta = 2.0 * std::numbers::pi * rng.uniform();
            topo.center_x.push_back(r * std::cos(theta));
            topo.center_y.push_back(r * std::sin(theta));
        }
        std::vector<std::uint32_t> counts(n_clusters);
        for (std::uint32_t c = 0; c < n_clusters; ++c) counts[c] = rng.poisson(mean_ues_per_cluster);
        for (std::uint32_t c = 0; c < n_clusters; ++c) {
            for (std::uint32_t i = 0; i < counts[c]; ++i) {
                double px = topo.center_x[c] + rng.gaussian(0.0, cluster_spread);
                double py = topo.center_y[c] + rng.gaussian(0.0, cluster_spread);
                clip_to_disc(px, py, area_radius);
                topo.x.push_back(px);
                topo.y.push_back(py);
            }
        }
        if (topo.ue_count() >= 2) return topo;
    }
}

Topology generate_topology_fixed(std::size_t ue_count, std::uint32_t n_clusters, double area_radius,
                                 double cluster_spread, std::uint64_t rng_seed) {
    if (ue_count < 2 || n_clusters < 1)
        throw std::invalid_argument("fixed topology needs at least two UEs and one cluster");
    if (!(area_radius > 0.0) || cluster_spread < 0.0)
        throw std::invalid_argument("area_radius must be positive and cluster_spread non-negative");
    RngStream rng(rng_seed);
    Topology topo;
    topo.area_radius = area_radius;
    for (std::uint32_t c = 0; c < n_clusters; ++c) {
        const double r = area_radius * std::sqrt(rng.uniform());
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        topo.center_x.push_back(r * std::cos(theta));
        topo.center_y.push_back(r * std::sin(theta));
    }
    // Conditioned on the total, per-cluster counts of equal-rate Poissons are
    // multinomial, so drawing each UE's cluster uniformly matches the
    // variable-count generator's law given this population.
    for (std::size_t i = 0; i < ue_count; ++i) {
        const auto c = std::min<std::uint32_t>(
            n_clusters - 1, static_cast<std::uint32_t>(rng.uniform() * static_cast<double>(n_clusters)));
        double px = topo.center_x[c] + rng.gaussian(0.0, cluster_spread);
        double py = topo.center_y[c] + rng.gaussian(0.0, cluster_spread);
        clip_to_disc(px, py, area_radius);
        topo.x.push_back(px);
        topo.y.push_back(py);
    }
    return topo;
}

void write_topology_csv(const Topology& topo, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "ue_id,x,y\n";
    for (std::size_t i = 0; i < topo.ue_count(); ++i) {
        out << i << ',' << format_double(topo.x[i]) << ',' << format_double(topo.y[i]) << '\n';
    }
}

Topology read_topology_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"ue_id", "x", "y"})
        throw std::runtime_error("expected topology header ue_id,x,y in " + path);
    Topology topo;
    std::size_t expect = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 3) throw std::runtime_error("malformed topology row in " + path);
        if (parse_uint_field(f[0], path) != expect)
            throw std::runtime_error("topology rows must be consecutive ue ids in " + path);
        ++expect;
        topo.x.push_back(parse_double_field(f[1], path));
        topo.y.push_back(parse_double_field(f[2], path));
        const double norm = std::sqrt(topo.x.back() * topo.x.back() + topo.y.back() * topo.y.back());
        topo.area_radius = std::max(topo.area_radius, norm);
    }
    return topo;
}

double link_rate(double gain, double interference, const RadioParams& p) {
    if (!(gain >= 0.0) || !(interference >= 0.0))
        throw std::invalid_argument("gain and interference must be non-negative");
    const double snr = ber_gap(p) * p.tx_power * gain / (p.bandwidth_per_rb * p.noise_psd + interference);
    return p.bandwidth_per_rb * std::log2(1.0 + snr);
}

LinkTable build_link_table(const Topology& topo, const RadioParams& p, std::uint64_t rng_seed) {
    const std::size_t n = topo.ue_count();
    RngStream rng(rng_seed);
    LinkTable t;
    t.n = n;
    t.rb_count = p.rb_count;
    t.gain.assign(n * n, 0.0);
    t.rb.assign(n * n, 0);
    t.interference.assign(n * n, 0.0);
    t.rate.assign(n * n, 0.0);

    struct DirLink {
        double dist;
        NodeId src, dst;
    };
    std::vector<DirLink> links;
    links.reserve(n * (n - 1));
    for (NodeId m = 0; m < n; ++m) {
        for (NodeId k = 0; k < n; ++k) {
            if (m == k) continue;
            const double dist = std::max(1.0, topo.distance(m, k));
            t.gain[m * n + k] = std::pow(dist, -p.pathloss_exponent) * rng.exponential(1.0);
            links.push_back(DirLink{dist, m, k});
        }
    }
    std::sort(links.begin(), links.end(), [](const DirLink& a, const DirLink& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
    std::vector<std::vector<NodeId>> transmitters(p.rb_count);
    for (std::size_t i = 0; i < links.size(); ++i) {
        const std::uint32_t block = static_cast<std::uint32_t>(i % p.rb_count);
        t.rb[links[i].src * n + links[i].dst] = block;
        transmitters[block].push_back(links[i].src);
    }
    for (auto& txs : transmitters) {
        std::sort(txs.begin(), txs.end());
        txs.erase(std::unique(txs.begin(), txs.end()), txs.end());
    }
    for (NodeId m = 0; m < n; ++m) {
        for (NodeId k = 0; k < n; ++k) {
            if (m == k) continue;
            double acc = 0.0;
            for (NodeId tx : transmitters[t.rb[m * n + k]]) {
                if (tx != m && tx != k) acc += p.tx_power * t.gain[tx * n + k];
            }
            t.interference[m * n + k] = acc;
            t.rate[m * n + k] = link_rate(t.gain[m * n + k], acc, p);
        }
    }
    return t;
}

void write_link_table_csv(const LinkTable& links, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "src,dst,gain,rb,rate\n";
    for (NodeId m = 0; m < links.n; ++m) {
        for (NodeId k = 0; k < links.n; ++k) {
            if (m == k) continue;
            out << m << ',' << k << ',' << format_double(links.gain_at(m, k)) << ',' << links.rb_at(m, k)
                << ',' << format_double(links.rate_at(m, k)) << '\n';
        }
    }
}

Graph build_d2d_graph(const LinkTable& links, const RadioParams& p) {
    const std::size_t n = links.n;
    const double min_rate = p.packet_bits / p.slot_duration;
    Graph g(n, false);
    for (NodeId m = 0; m < n; ++m) {
        for (NodeId k = m + 1; k < n; ++k) {
            if (links.rate_at(m, k) >= min_rate && links.rate_at(k, m) >= min_rate) g.add_edge(m, k, 1.0);
        }
    }
    return g;
}

} // namespace d2d

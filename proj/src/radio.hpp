#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace d2d {

// Physical-layer parameters shared by every UE.
struct RadioParams {
    double bandwidth_per_rb = 15000.0;   // Hz per resource block
    double carrier_freq = 2.0e9;         // Hz, carried for reporting
    double tx_power = 2.0e-5;            // W per transmitter
    double noise_psd = 1.0e-20;          // W/Hz
    double pathloss_exponent = 2.5;
    double target_ber = 1.0e-7;          // bit error rate target, in (0, 0.2)
    double packet_bits = 100.0;          // payload that must fit in one slot
    double slot_duration = 1.0e-3;       // s
    std::uint32_t rb_count = 20000;      // orthogonal resource blocks
    std::uint32_t log_base = 2;          // rate is in bits, so always 2

    bool operator==(const RadioParams&) const = default;
};

// Empty when valid; otherwise one message per violated constraint.
std::vector<std::string> validate_radio_params(const RadioParams& p);

// SNR gap to capacity for the target bit error rate.
double ber_gap(const RadioParams& p);

struct Topology {
    std::vector<double> x, y;            // per UE, metres
    double area_radius = 0.0;            // disc radius around the origin
    std::vector<double> center_x, center_y;  // cluster centers

    std::size_t ue_count() const { return x.size(); }
    double distance(std::size_t a, std::size_t b) const;
};

// Poisson cluster process on a disc: cluster centers uniform on the disc,
// per-cluster UE counts Poisson(mean_ues_per_cluster), UE offsets isotropic
// Gaussian with std cluster_spread, positions projected back onto the disc.
// Redraws everything until at least 2 UEs exist.
Topology generate_topology(std::uint32_t n_clusters, double mean_ues_per_cluster, double area_radius,
                           double cluster_spread, std::uint64_t rng_seed);

// Same cluster process conditioned on an exact UE count (cluster choice per
// UE is uniform, matching the multinomial law of the counts given the total).
Topology generate_topology_fixed(std::size_t ue_count, std::uint32_t n_clusters, double area_radius,
                                 double cluster_spread, std::uint64_t rng_seed);

void write_topology_csv(const Topology& topo, const std::string& path);
// Positions only; area_radius is recovered as the largest norm.
Topology read_topology_csv(const std::string& path);

// Dense per-directed-pair channel state; diagonal entries are unused zeros.
struct LinkTable {
    std::size_t n = 0;
    std::uint32_t rb_count = 0;
    std::vector<double> gain;            // h_mn, row-major [m*n + k]
    std::vector<std::uint32_t> rb;       // resource block per directed link
    std::vector<double> interference;    // W at the receiver of link (m,k)
    std::vector<double> rate;            // bit/s

    double gain_at(NodeId m, NodeId k) const { return gain[m * n + k]; }
    std::uint32_t rb_at(NodeId m, NodeId k) const { return rb[m * n + k]; }
    double interference_at(NodeId m, NodeId k) const { return interference[m * n + k]; }
    double rate_at(NodeId m, NodeId k) const { return rate[m * n + k]; }
};

// Rate of one directed link: B_w * log2(1 + gap * p * h / (B_w * N0 + I)).
double link_rate(double gain, double interference, const RadioParams& p);

// Gains are pathloss (distance clamped to >= 1 m) times Exp(1) fading, drawn
// independently per direction. Directed links are ordered by (distance, src,
// dst) and take resource blocks round-robin; interference at link (m,k) sums
// tx_power * h_tk over co-block transmitters t outside {m, k}.
LinkTable build_link_table(const Topology& topo, const RadioParams& p, std::uint64_t rng_seed);

void write_link_table_csv(const LinkTable& links, const std::string& path);

// Undirected edge {m,n} iff a packet_bits payload fits in one slot in both
// directions, i.e. min(rate_mn, rate_nm) >= packet_bits / slot_duration.
Graph build_d2d_graph(const LinkTable& links, const RadioParams& p);

} // namespace d2d

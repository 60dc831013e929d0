#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace d2d {

// splitmix64 output function (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives a sub-seed from a parent seed and a tag. Every random stream in the
// pipeline is seeded as derive_seed(derive_seed(master, tag1), tag2)...  so
// that runs are reproducible and streams never overlap by construction.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag) {
    return splitmix64(parent ^ (0x9e3779b97f4a7c15ULL + tag * 0xbf58476d1ce4e5b9ULL));
}

// Counter-based generator on the splitmix64 output function. All sampling in
// the project goes through this class so streams are identical across
// platforms and standard-library versions.
class RngStream {
public:
    RngStream() : state_(0) {}
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform on (0, 1]; used for weights with an exclusive zero bound.
    double uniform_pos() { return 1.0 - uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential(double mean) { return -mean * std::log(uniform_pos()); }

    // Box-Muller, one value per call (the pair's second half is discarded to
    // keep the draw count per sample site fixed).
    double gaussian(double mean, double stddev) {
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Counts Exp(1) arrivals before time `mean`; exact and stable for any mean.
    std::uint32_t poisson(double mean) {
        if (mean < 0.0) throw std::invalid_argument("poisson: mean must be nonnegative");
        std::uint32_t k = 0;
        double acc = 0.0;
        while (true) {
            acc += exponential(1.0);
            if (acc > mean) return k;
            ++k;
        }
    }

    // Index in [0, n) proportional to weights[i]; total must be positive.
    std::uint32_t pick_weighted(const double* weights, std::uint32_t n, double total) {
        double target = uniform() * total;
        double acc = 0.0;
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            acc += weights[i];
            if (target < acc) return i;
        }
        return n - 1;
    }

private:
    std::uint64_t state_;
};

} // namespace d2d

#pragma once

#include <cstdint>
#include <random>

namespace cqc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG with explicit sampling primitives. std::mt19937_64 is
// portable across implementations but the std distributions are not, so the
// bounded-int and unit-double mappings live here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed), mix_seed_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return unit() < p;
    }

    // Independent child stream; mixing makes (seed, tag) pairs non-colliding
    // in practice even for small consecutive tags.
    Rng fork(std::uint64_t tag) const {
        std::uint64_t s = mix_seed_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
        std::uint64_t a = splitmix64(s);
        std::uint64_t b = splitmix64(s);
        return Rng(a ^ (b << 1));
    }

    static Rng seeded(std::uint64_t master, std::uint64_t stream) {
        std::uint64_t s = master;
        (void)splitmix64(s);
        s ^= 0xd1b54a32d192ed03ULL * (stream + 1);
        return Rng(splitmix64(s));
    }

  private:
    std::mt19937_64 eng_;
    std::uint64_t mix_seed_ = 0;
};

// Per-node stream derived from a master seed and node id, so concurrent
// simulations and reordered node wake-ups cannot perturb sampling.
inline Rng node_rng(std::uint64_t master_seed, int node_id) {
    return Rng::seeded(master_seed, 0x100000000ULL + static_cast<std::uint64_t>(node_id));
}

} // namespace cqc

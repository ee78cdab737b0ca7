#ifndef NETCLUST_RNG_HPP
#define NETCLUST_RNG_HPP

#include <cstdint>
#include <random>

namespace netclust {

/// Deterministic random stream with explicit distribution code, so results
/// are reproducible across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound must be positive.
    std::int32_t uniform_int(std::int32_t bound) {
        return static_cast<std::int32_t>(next_u64() % static_cast<std::uint64_t>(bound));
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Derives independent substreams from a master seed, keyed by iteration
/// and member index. Identical keys give identical streams, which keeps
/// runs reproducible no matter how member updates are scheduled.
class RngStreams {
public:
    /// Iteration key used for streams consumed before the first iteration.
    static constexpr std::uint64_t init_iteration = ~std::uint64_t{0};

    explicit RngStreams(std::uint64_t master_seed) : master_seed_(master_seed) {}

    std::uint64_t master_seed() const { return master_seed_; }

    Rng stream(std::uint64_t iteration, std::uint64_t member) const {
        return Rng(mix(mix(mix(master_seed_) ^ iteration) ^ member));
    }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t master_seed_;
};

}  // namespace netclust

#endif  // NETCLUST_RNG_HPP

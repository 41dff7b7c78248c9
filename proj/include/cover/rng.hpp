#pragma once

#include <cstdint>
#include <random>

namespace cover {

// splitmix64 finalizer, used for seed conditioning and stream derivation.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seedable generator with counter-based stream splitting.
// All variate generation is done on raw mt19937_64 output; the standard
// <random> distributions are implementation-defined and would break
// cross-platform reproducibility.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64+splitmix64-streams";

    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    // Independent stream for task `task_index` under a master seed.
    static Rng stream(std::uint64_t master_seed, std::uint64_t task_index) {
        return Rng(mix64(master_seed ^ mix64(task_index + 1)));
    }

    std::uint64_t next() { return engine_(); }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1]
    double symmetric() { return 2.0 * unit() - 1.0; }

    // uniform integer in [0, n), unbiased via rejection
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cover

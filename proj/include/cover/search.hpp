#pragma once

#include <cstdint>
#include <vector>

#include "cover/encoding.hpp"
#include "cover/spinglass.hpp"

namespace cover {

struct WalkSample {
    long long t;
    double value;
};

// Accepted-value history of an adaptive walk; values are non-increasing in t.
template <class State>
struct WalkTrace {
    std::vector<WalkSample> samples;
    State final_state;
    double best_value;
    State best_state;
    std::uint64_t seed;
};

struct RestartSummary {
    long long t_total;
    long long tau;
    std::vector<double> minima;  // one best energy per restart segment
    double eta_min_overall;
};

// Adaptive walk on the encoded landscape (forests, objective G), starting
// from the empty forest. Accepts proposals with G not worse than the current
// value. Values of G are recorded at the requested steps.
WalkTrace<Forest> adaptive_walk_encoded(const SpinGlassInstance& inst, long long t_max,
                                        std::uint64_t seed,
                                        const std::vector<long long>& record_at = {});

// Single-spin-flip adaptive walk on the direct landscape, uniform random
// start, O(1) per step via incremental energy differences.
WalkTrace<SpinConfig> adaptive_walk_direct(const SpinGlassInstance& inst, long long t_max,
                                           std::uint64_t seed,
                                           const std::vector<long long>& record_at = {});

// t_total/tau independent direct walks of length tau from uniform initial
// states; segment k runs on Rng::stream(seed, k).
RestartSummary restart_walk_direct(const SpinGlassInstance& inst, long long t_total,
                                   long long tau, std::uint64_t seed);

}  // namespace cover

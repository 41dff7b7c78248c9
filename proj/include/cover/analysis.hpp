#pragma once

#include <cstdint>
#include <vector>

#include "cover/encoding.hpp"
#include "cover/search.hpp"

namespace cover {

struct PValueReport {
    double eta_min;
    long long n_samples;
    long long n_leq;  // restart minima <= eta_min
    double p;
    long long t;
    long long tau;
};

struct ClusterStats {
    std::vector<int> sizes;  // component sizes, descending
    int largest;
    int second_largest;  // 0 with a single component

    // fraction of components with size >= s
    double cumulative(int s) const;
};

// Fraction of restart walks (total length t, restart period tau) whose
// overall minimum reaches eta_min or below. Sample k runs on
// Rng::stream(seed, k).
PValueReport empirical_pvalue(const SpinGlassInstance& inst, double eta_min, long long t,
                              long long tau, long long n_samples, std::uint64_t seed);

ClusterStats cluster_stats(const Forest& y);

// Random forest with the requested edge count: uniform site pairs, rejecting
// cycle-closing draws. Not uniform over all such forests.
Forest surrogate_forest(int n_sites, int n_edges, std::uint64_t seed);

}  // namespace cover

#include "cover/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "cover/dsu.hpp"

namespace cover {

double ClusterStats::cumulative(int s) const {
    if (sizes.empty()) return 0.0;
    long long count = std::count_if(sizes.begin(), sizes.end(), [s](int v) { return v >= s; });
    return static_cast<double>(count) / static_cast<double>(sizes.size());
}

PValueReport empirical_pvalue(const SpinGlassInstance& inst, double eta_min, long long t,
                              long long tau, long long n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    long long n_leq = 0;
    for (long long k = 0; k < n_samples; ++k) {
        RestartSummary summary =
            restart_walk_direct(inst, t, tau, mix64(seed ^ mix64(static_cast<std::uint64_t>(k))));
        if (summary.eta_min_overall <= eta_min) ++n_leq;
    }
    return {eta_min, n_samples, n_leq,
            static_cast<double>(n_leq) / static_cast<double>(n_samples), t, tau};
}

ClusterStats cluster_stats(const Forest& y) {
    Partition part = components(y);
    ClusterStats stats;
    stats.sizes.reserve(part.size());
    for (const auto& comp : part.components) stats.sizes.push_back(static_cast<int>(comp.size()));
    std::sort(stats.sizes.begin(), stats.sizes.end(), std::greater<int>());
    stats.largest = stats.sizes.front();
    stats.second_largest = stats.sizes.size() > 1 ? stats.sizes[1] : 0;
    return stats;
}

Forest surrogate_forest(int n_sites, int n_edges, std::uint64_t seed) {
    if (n_edges < 0 || n_edges > n_sites - 1)
        throw std::invalid_argument("forest on n sites holds at most n-1 edges");
    Forest y(n_sites);
    Rng rng(seed);
    Dsu dsu(n_sites);
    int placed = 0;
    while (placed < n_edges) {
        int i = static_cast<int>(rng.below(n_sites));
        int j = static_cast<int>(rng.below(n_sites - 1));
        if (j >= i) ++j;
        if (dsu.unite(i, j)) {
            y.add_edge(i, j);
            ++placed;
        }
    }
    return y;
}

}  // namespace cover

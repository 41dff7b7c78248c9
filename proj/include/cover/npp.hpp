#pragma once

#include <cstdint>
#include <vector>

#include "cover/rng.hpp"
#include "cover/search.hpp"

namespace cover {

// Number partitioning instance: positive numbers to split into two subsets
// with sums as close as possible.
struct NppInstance {
    std::vector<double> numbers;
};

void validate_npp(const NppInstance& inst);

using SignVector = std::vector<int>;   // entries are exactly -1 or +1
using Prepartition = std::vector<int>; // cluster ids in {1,...,N}

// |sum_i s_i a_i|
double npp_cost(const NppInstance& inst, const SignVector& s);

struct CoarseNpp {
    NppInstance instance;          // one number per non-empty cluster
    std::vector<int> cluster_ids;  // ascending; cluster_ids[c] backs coarse index c
};

// Sum the numbers within each non-empty cluster.
CoarseNpp coarse_npp(const NppInstance& inst, const Prepartition& y);

struct KkResult {
    double discrepancy;
    SignVector signs;  // npp_cost(inst, signs) == discrepancy
};

// Largest differencing (Karmarkar-Karp) heuristic with sign reconstruction
// through the difference tree.
KkResult kk_differencing(const NppInstance& inst);

// KK on the coarse instance, with the coarse signs lifted back to a full
// sign vector. Exact restricted optimum when y has at most two non-empty
// clusters.
KkResult npp_heuristic_G(const NppInstance& inst, const Prepartition& y);

// Adaptive walk over prepartitions from the identity prepartition; per step
// one uniformly chosen index moves to a uniformly chosen cluster.
WalkTrace<Prepartition> npp_adaptive_walk(const NppInstance& inst, long long t_max,
                                          std::uint64_t seed,
                                          const std::vector<long long>& record_at = {});

// Exhaustive optimum, N <= 24; test and ground-truth oracle.
KkResult npp_brute_force(const NppInstance& inst);

}  // namespace cover

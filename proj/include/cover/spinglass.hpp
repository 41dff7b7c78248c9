#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cover/rng.hpp"

namespace cover {

// Unordered coupling pair, stored once with i < j.
struct Bond {
    int i;
    int j;
    double a;
};

struct GridMeta {
    int side = 0;
    bool periodic = true;
};

using SpinConfig = std::vector<int>;  // entries are exactly -1 or +1

// Quadratic spin-glass instance: one energy term per bond plus per-site
// fields. Immutable after construction; neighbor lists are precomputed so
// single-flip energy differences touch only incident bonds.
class SpinGlassInstance {
public:
    SpinGlassInstance(int n_sites, std::vector<Bond> bonds, std::vector<double> fields,
                      std::optional<GridMeta> grid = std::nullopt, std::uint64_t seed = 0);

    int n_sites() const { return n_sites_; }
    const std::vector<Bond>& bonds() const { return bonds_; }
    const std::vector<double>& fields() const { return fields_; }
    const std::optional<GridMeta>& grid() const { return grid_; }
    std::uint64_t seed() const { return seed_; }

    // (neighbor site, coupling) pairs incident to site i
    const std::vector<std::pair<int, double>>& neighbors(int i) const { return nbrs_[i]; }

private:
    int n_sites_;
    std::vector<Bond> bonds_;
    std::vector<double> fields_;
    std::optional<GridMeta> grid_;
    std::uint64_t seed_;
    std::vector<std::vector<std::pair<int, double>>> nbrs_;
};

struct GroundState {
    SpinConfig config;
    double energy;
};

struct ContractionResult {
    SpinGlassInstance reduced;
    double offset;              // relative_sign * a_kl of the parent
    std::vector<int> site_map;  // old site -> new site; l folds into k
    int relative_sign;          // +1 or -1
};

// Periodic L x L grid with couplings i.i.d. uniform on [-1, 1], all fields
// zero. L >= 3; L = 2 would create parallel bonds on the periodic grid.
SpinGlassInstance gen_grid_instance(int L, std::uint64_t seed);

double energy(const SpinGlassInstance& inst, const SpinConfig& x);

// energy(x with spin i flipped) - energy(x); O(degree of i)
double energy_delta(const SpinGlassInstance& inst, const SpinConfig& x, int i);

// Exhaustive minimum over all 2^n configurations, n <= 24. Ties broken by
// the lowest binary encoding of the spin vector (-1 -> 0).
GroundState brute_force_ground_state(const SpinGlassInstance& inst);

// Freeze x_l := rel * x_k and eliminate site l. For every x respecting the
// constraint, energy(inst, x) = energy(reduced, x restricted) + offset.
ContractionResult contract_pair(const SpinGlassInstance& inst, int k, int l, int rel);

}  // namespace cover

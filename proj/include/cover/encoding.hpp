#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cover/rng.hpp"
#include "cover/spinglass.hpp"

namespace cover {

// Acyclic set of unordered site pairs; edges may join any two sites, not
// only lattice bonds. Edges kept sorted with i < j.
class Forest {
public:
    explicit Forest(int n_sites);

    int n_sites() const { return n_sites_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;

    // throws if the edge would close a cycle or already exists
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

private:
    int n_sites_;
    std::vector<std::pair<int, int>> edges_;
};

struct Partition {
    std::vector<int> component_of;            // site -> component id
    std::vector<std::vector<int>> components; // ids ordered by smallest member
    int size() const { return static_cast<int>(components.size()); }
};

// Block-spin instance: couplings over unordered component pairs plus the
// additive offset of the bonds internal to components.
struct CoarseInstance {
    int n_components = 0;
    std::map<std::pair<int, int>, double> couplings;  // {c,d} with c < d
    double offset = 0.0;
};

using CoarseConfig = std::vector<int>;  // entries are exactly -1 or +1

struct OracleResult {
    double value;
    SpinConfig config;
};

Partition components(const Forest& y);

// Requires all instance fields to be zero.
CoarseInstance coarse_grain(const SpinGlassInstance& inst, const Forest& y);

// x_i = z[component of i]
SpinConfig lift(const Forest& y, const CoarseConfig& z);

double coarse_energy(const CoarseInstance& coarse, const CoarseConfig& z);

// Exact oracle: brute-force minimum over the block-spin configurations,
// #components <= 24. Returns the minimum and a lifted minimizer.
OracleResult oracle_F(const SpinGlassInstance& inst, const Forest& y);

// Greedy merge heuristic: repeatedly unify the component pair with the most
// negative aggregate coupling as parallel until two block spins remain, then
// pick their best relative orientation. Always an upper bound on oracle_F,
// exact when #components <= 2.
OracleResult heuristic_G(const SpinGlassInstance& inst, const Forest& y);

// Draw an ordered site pair (i, j), i != j, uniformly. Different components:
// insert {i,j}. Same component: remove a uniformly chosen existing edge.
Forest propose_forest_move(const Forest& y, Rng& rng);

}  // namespace cover

#include "cover/spinglass.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cover {

SpinGlassInstance::SpinGlassInstance(int n_sites, std::vector<Bond> bonds,
                                     std::vector<double> fields, std::optional<GridMeta> grid,
                                     std::uint64_t seed)
    : n_sites_(n_sites),
      bonds_(std::move(bonds)),
      fields_(std::move(fields)),
      grid_(grid),
      seed_(seed) {
    if (n_sites_ <= 0) throw std::invalid_argument("n_sites must be positive");
    if (static_cast<int>(fields_.size()) != n_sites_)
        throw std::invalid_argument("fields length must equal n_sites");
    std::set<std::pair<int, int>> seen;
    for (auto& b : bonds_) {
        if (b.i < 0 || b.i >= n_sites_ || b.j < 0 || b.j >= n_sites_)
            throw std::invalid_argument("bond site index out of range");
        if (b.i == b.j) throw std::invalid_argument("self-loop bond not allowed");
        if (b.i > b.j) std::swap(b.i, b.j);
        if (!seen.insert({b.i, b.j}).second)
            throw std::invalid_argument("duplicate bond {" + std::to_string(b.i) + "," +
                                        std::to_string(b.j) + "}");
    }
    nbrs_.assign(n_sites_, {});
    for (const auto& b : bonds_) {
        nbrs_[b.i].push_back({b.j, b.a});
        nbrs_[b.j].push_back({b.i, b.a});
    }
}

SpinGlassInstance gen_grid_instance(int L, std::uint64_t seed) {
    if (L < 3)
        throw std::invalid_argument(
            "grid side must be >= 3: L = 2 creates parallel bonds on the periodic grid");
    Rng rng(seed);
    const int n = L * L;
    std::vector<Bond> bonds;
    bonds.reserve(2 * n);
    auto site = [L](int r, int c) { return ((r + L) % L) * L + (c + L) % L; };
    for (int r = 0; r < L; ++r) {
        for (int c = 0; c < L; ++c) {
            bonds.push_back({site(r, c), site(r, c + 1), rng.symmetric()});
            bonds.push_back({site(r, c), site(r + 1, c), rng.symmetric()});
        }
    }
    return SpinGlassInstance(n, std::move(bonds), std::vector<double>(n, 0.0),
                             GridMeta{L, true}, seed);
}

static void check_config(const SpinGlassInstance& inst, const SpinConfig& x) {
    if (static_cast<int>(x.size()) != inst.n_sites())
        throw std::invalid_argument("spin configuration length does not match instance");
}

double energy(const SpinGlassInstance& inst, const SpinConfig& x) {
    check_config(inst, x);
    double e = 0.0;
    for (const auto& b : inst.bonds()) e += b.a * x[b.i] * x[b.j];
    for (int i = 0; i < inst.n_sites(); ++i) e += inst.fields()[i] * x[i];
    return e;
}

double energy_delta(const SpinGlassInstance& inst, const SpinConfig& x, int i) {
    check_config(inst, x);
    if (i < 0 || i >= inst.n_sites()) throw std::invalid_argument("site index out of range");
    double local = inst.fields()[i];
    for (const auto& [j, a] : inst.neighbors(i)) local += a * x[j];
    return -2.0 * x[i] * local;
}

GroundState brute_force_ground_state(const SpinGlassInstance& inst) {
    const int n = inst.n_sites();
    if (n > 24) throw std::invalid_argument("brute force limited to n_sites <= 24");
    SpinConfig x(n), best(n);
    double best_e = 0.0;
    bool have = false;
    for (std::uint64_t code = 0; code < (1ull << n); ++code) {
        for (int i = 0; i < n; ++i) x[i] = (code >> i) & 1 ? 1 : -1;
        double e = energy(inst, x);
        if (!have || e < best_e) {
            have = true;
            best_e = e;
            best = x;
        }
    }
    return {best, best_e};
}

ContractionResult contract_pair(const SpinGlassInstance& inst, int k, int l, int rel) {
    const int n = inst.n_sites();
    if (k < 0 || k >= n || l < 0 || l >= n) throw std::invalid_argument("site index out of range");
    if (k == l) throw std::invalid_argument("cannot contract a site with itself");
    if (rel != 1 && rel != -1) throw std::invalid_argument("relative sign must be +1 or -1");

    std::vector<int> site_map(n);
    for (int s = 0; s < n; ++s) site_map[s] = s < l ? s : s - 1;
    site_map[l] = site_map[k];

    double offset = 0.0;
    std::map<std::pair<int, int>, double> acc;  // merged bonds, summed couplings
    for (const auto& b : inst.bonds()) {
        int i2 = site_map[b.i];
        int j2 = site_map[b.j];
        double a = b.a;
        if (b.i == l || b.j == l) {
            if (i2 == j2) {  // the (k,l) bond itself
                offset = rel * b.a;
                continue;
            }
            a *= rel;
        }
        if (i2 > j2) std::swap(i2, j2);
        acc[{i2, j2}] += a;
    }
    std::vector<Bond> bonds;
    bonds.reserve(acc.size());
    for (const auto& [pr, a] : acc) bonds.push_back({pr.first, pr.second, a});

    std::vector<double> fields(n - 1, 0.0);
    for (int s = 0; s < n; ++s) {
        if (s == l) continue;
        fields[site_map[s]] += inst.fields()[s];
    }
    fields[site_map[k]] += rel * inst.fields()[l];

    SpinGlassInstance reduced(n - 1, std::move(bonds), std::move(fields));
    return {std::move(reduced), offset, std::move(site_map), rel};
}

}  // namespace cover

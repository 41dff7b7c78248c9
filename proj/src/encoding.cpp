#include "cover/encoding.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "cover/dsu.hpp"

namespace cover {

Forest::Forest(int n_sites) : n_sites_(n_sites) {
    if (n_sites <= 0) throw std::invalid_argument("forest needs a positive site count");
}

static std::pair<int, int> norm_edge(int i, int j, int n) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("edge site out of range");
    if (i == j) throw std::invalid_argument("self-loop edge not allowed");
    return {std::min(i, j), std::max(i, j)};
}

bool Forest::has_edge(int i, int j) const {
    auto e = norm_edge(i, j, n_sites_);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void Forest::add_edge(int i, int j) {
    auto e = norm_edge(i, j, n_sites_);
    Dsu dsu(n_sites_);
    for (const auto& [a, b] : edges_) dsu.unite(a, b);
    if (dsu.same(e.first, e.second))
        throw std::invalid_argument("edge would close a cycle or duplicate an existing edge");
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

void Forest::remove_edge(int i, int j) {
    auto e = norm_edge(i, j, n_sites_);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw std::invalid_argument("edge not in forest");
    edges_.erase(it);
}

Partition components(const Forest& y) {
    const int n = y.n_sites();
    Dsu dsu(n);
    for (const auto& [a, b] : y.edges()) dsu.unite(a, b);
    Partition part;
    part.component_of.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        int r = dsu.find(s);
        if (part.component_of[r] < 0) {
            part.component_of[r] = static_cast<int>(part.components.size());
            part.components.push_back({});
        }
        part.component_of[s] = part.component_of[r];
        part.components[part.component_of[s]].push_back(s);
    }
    return part;
}

CoarseInstance coarse_grain(const SpinGlassInstance& inst, const Forest& y) {
    if (y.n_sites() != inst.n_sites())
        throw std::invalid_argument("forest and instance site counts differ");
    for (double b : inst.fields())
        if (b != 0.0)
            throw std::invalid_argument("coarse graining supports zero-field instances only");
    Partition part = components(y);
    CoarseInstance coarse;
    coarse.n_components = part.size();
    for (const auto& b : inst.bonds()) {
        int c = part.component_of[b.i];
        int d = part.component_of[b.j];
        if (c == d) {
            coarse.offset += b.a;
        } else {
            coarse.couplings[{std::min(c, d), std::max(c, d)}] += b.a;
        }
    }
    return coarse;
}

SpinConfig lift(const Forest& y, const CoarseConfig& z) {
    Partition part = components(y);
    if (static_cast<int>(z.size()) != part.size())
        throw std::invalid_argument("coarse configuration length does not match #components");
    SpinConfig x(y.n_sites());
    for (int s = 0; s < y.n_sites(); ++s) x[s] = z[part.component_of[s]];
    return x;
}

double coarse_energy(const CoarseInstance& coarse, const CoarseConfig& z) {
    if (static_cast<int>(z.size()) != coarse.n_components)
        throw std::invalid_argument("coarse configuration length does not match #components");
    double e = 0.0;
    for (const auto& [pr, a] : coarse.couplings) e += a * z[pr.first] * z[pr.second];
    return e;
}

OracleResult oracle_F(const SpinGlassInstance& inst, const Forest& y) {
    CoarseInstance coarse = coarse_grain(inst, y);
    const int m = coarse.n_components;
    if (m > 24) throw std::invalid_argument("oracle_F limited to #components <= 24");
    CoarseConfig z(m), best(m);
    double best_e = 0.0;
    bool have = false;
    for (std::uint64_t code = 0; code < (1ull << m); ++code) {
        for (int c = 0; c < m; ++c) z[c] = (code >> c) & 1 ? 1 : -1;
        double e = coarse_energy(coarse, z);
        if (!have || e < best_e) {
            have = true;
            best_e = e;
            best = z;
        }
    }
    return {best_e + coarse.offset, lift(y, best)};
}

namespace {

// (coupling, p, q) with p < q; min-heap with lexicographic tie-breaking
using MergeCand = std::tuple<double, int, int>;
using MergeHeap = std::priority_queue<MergeCand, std::vector<MergeCand>, std::greater<MergeCand>>;

// lexicographically smallest pair of alive roots with no aggregate coupling
bool smallest_absent_pair(const std::vector<std::map<int, double>>& adj,
                          const std::vector<char>& alive, int& out_p, int& out_q) {
    std::vector<int> roots;
    for (int r = 0; r < static_cast<int>(alive.size()); ++r)
        if (alive[r]) roots.push_back(r);
    for (size_t a = 0; a < roots.size(); ++a) {
        int p = roots[a];
        if (adj[p].size() + 1 == roots.size()) continue;  // complete row
        for (size_t b = a + 1; b < roots.size(); ++b) {
            if (!adj[p].count(roots[b])) {
                out_p = p;
                out_q = roots[b];
                return true;
            }
        }
    }
    return false;
}

}  // namespace

OracleResult heuristic_G(const SpinGlassInstance& inst, const Forest& y) {
    Partition part = components(y);
    const int m = part.size();

    std::vector<std::map<int, double>> adj(m);
    for (const auto& b : inst.bonds()) {
        int c = part.component_of[b.i];
        int d = part.component_of[b.j];
        if (c != d) {
            adj[c][d] += b.a;
            adj[d][c] += b.a;
        }
    }
    MergeHeap heap;
    for (int c = 0; c < m; ++c)
        for (const auto& [d, a] : adj[c])
            if (c < d) heap.push({a, c, d});

    std::vector<char> alive(m, 1);
    Dsu groups(m);
    int n_active = m;
    while (n_active > 2) {
        // best pair among present aggregate couplings; stale heap entries are
        // skipped by validating against the current coupling value
        bool have_present = false;
        while (!heap.empty()) {
            auto [v, p, q] = heap.top();
            if (alive[p] && alive[q]) {
                auto it = adj[p].find(q);
                if (it != adj[p].end() && it->second == v) {
                    have_present = true;
                    break;
                }
            }
            heap.pop();
        }
        bool chosen = have_present;
        int p = 0, q = 0;
        double val = 0.0;
        if (have_present) std::tie(val, p, q) = heap.top();
        // absent pairs carry an implicit zero coupling and take part in the
        // argmin; only relevant when every present coupling is non-negative
        if (!have_present || val >= 0.0) {
            int ap, aq;
            if (smallest_absent_pair(adj, alive, ap, aq)) {
                if (!have_present || val > 0.0 ||
                    (val == 0.0 && std::make_pair(ap, aq) < std::make_pair(p, q))) {
                    p = ap;
                    q = aq;
                    val = 0.0;
                }
                chosen = true;
            }
        }
        if (!chosen) throw std::logic_error("no mergeable component pair");
        // unify p and q as parallel, summing coupling rows
        for (const auto& [s, v] : adj[q]) {
            adj[s].erase(q);
            if (s == p) continue;
            double w = (adj[p][s] += v);
            adj[s][p] = w;
            heap.push({w, std::min(p, s), std::max(p, s)});
        }
        adj[p].erase(q);
        adj[q].clear();
        alive[q] = 0;
        groups.unite(p, q);
        --n_active;
    }

    std::vector<int> sign(m, 1);
    if (n_active == 2) {
        int r1 = -1, r2 = -1;
        for (int r = 0; r < m; ++r)
            if (alive[r]) (r1 < 0 ? r1 : r2) = r;
        auto it = adj[r1].find(r2);
        double cross = it == adj[r1].end() ? 0.0 : it->second;
        sign[r2] = cross > 0.0 ? -1 : 1;
    }
    SpinConfig x(inst.n_sites());
    for (int s = 0; s < inst.n_sites(); ++s) x[s] = sign[groups.find(part.component_of[s])];
    return {energy(inst, x), x};
}

Forest propose_forest_move(const Forest& y, Rng& rng) {
    const int n = y.n_sites();
    if (n < 2) throw std::invalid_argument("need at least two sites to propose a move");
    int i = static_cast<int>(rng.below(n));
    int j = static_cast<int>(rng.below(n - 1));
    if (j >= i) ++j;
    Dsu dsu(n);
    for (const auto& [a, b] : y.edges()) dsu.unite(a, b);
    Forest next = y;
    if (!dsu.same(i, j)) {
        next.add_edge(i, j);
    } else if (!y.edges().empty()) {
        auto e = y.edges()[rng.below(y.edges().size())];
        next.remove_edge(e.first, e.second);
    }
    return next;
}

}  // namespace cover

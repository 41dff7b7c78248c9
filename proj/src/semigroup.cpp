#include "cover/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "cover/dsu.hpp"

namespace cover {

std::vector<std::string> schema_members(const Schema& y) {
    const int n = static_cast<int>(y.size());
    if (n > 20) throw std::invalid_argument("schema enumeration limited to N <= 20");
    std::vector<int> wild;
    for (int i = 0; i < n; ++i) {
        if (y[i] == '*')
            wild.push_back(i);
        else if (y[i] != '0' && y[i] != '1')
            throw std::invalid_argument("schema alphabet is {0, 1, *}");
    }
    std::vector<std::string> members;
    members.reserve(1ull << wild.size());
    for (std::uint64_t code = 0; code < (1ull << wild.size()); ++code) {
        std::string x = y;
        for (size_t k = 0; k < wild.size(); ++k) x[wild[k]] = (code >> k) & 1 ? '1' : '0';
        members.push_back(std::move(x));
    }
    return members;
}

int EncodingDigraph::index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("no vertex labeled " + label);
    return static_cast<int>(it - labels.begin());
}

static void orient_edges(EncodingDigraph& dg,
                         const std::vector<std::pair<int, int>>& undirected) {
    for (const auto& [u, v] : undirected) {
        if (dg.h[u] >= dg.h[v]) dg.arcs.insert({u, v});
        if (dg.h[v] >= dg.h[u]) dg.arcs.insert({v, u});
    }
}

EncodingDigraph build_schema_digraph(int N) {
    if (N < 1 || N > 4) throw std::invalid_argument("schema digraph limited to 1 <= N <= 4");
    const char alphabet[3] = {'0', '1', '*'};
    EncodingDigraph dg;
    std::uint64_t count = 1;
    for (int i = 0; i < N; ++i) count *= 3;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        std::string y(N, '0');
        for (int i = 0; i < N; ++i) {
            y[i] = alphabet[c % 3];
            c /= 3;
        }
        int wildcards = static_cast<int>(std::count(y.begin(), y.end(), '*'));
        dg.labels.push_back(y);
        dg.h.push_back(1ull << wildcards);
        std::set<std::uint64_t> members;
        for (const auto& x : schema_members(y)) {
            std::uint64_t packed = 0;
            for (int i = 0; i < N; ++i)
                if (x[i] == '1') packed |= 1ull << i;
            members.insert(packed);
        }
        dg.phi.push_back(std::move(members));
    }
    std::vector<std::pair<int, int>> undirected;
    for (int u = 0; u < dg.n_vertices(); ++u) {
        for (int v = u + 1; v < dg.n_vertices(); ++v) {
            int dist = 0;
            for (int i = 0; i < N; ++i) dist += dg.labels[u][i] != dg.labels[v][i];
            if (dist == 1) undirected.push_back({u, v});
        }
    }
    orient_edges(dg, undirected);
    return dg;
}

EncodingDigraph build_forest_digraph(int n_sites) {
    if (n_sites < 1 || n_sites > 4)
        throw std::invalid_argument("forest digraph limited to 1 <= n_sites <= 4");
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n_sites; ++i)
        for (int j = i + 1; j < n_sites; ++j) all_edges.push_back({i, j});
    const int ne = static_cast<int>(all_edges.size());

    EncodingDigraph dg;
    std::vector<std::uint64_t> edge_masks;
    for (std::uint64_t mask = 0; mask < (1ull << ne); ++mask) {
        Dsu dsu(n_sites);
        bool acyclic = true;
        for (int e = 0; e < ne && acyclic; ++e)
            if ((mask >> e) & 1) acyclic = dsu.unite(all_edges[e].first, all_edges[e].second);
        if (!acyclic) continue;

        std::string label = "{";
        for (int e = 0; e < ne; ++e) {
            if (!((mask >> e) & 1)) continue;
            if (label.size() > 1) label += ",";
            label += std::to_string(all_edges[e].first) + "-" + std::to_string(all_edges[e].second);
        }
        label += "}";

        // configurations constant on each component
        Dsu comp(n_sites);
        for (int e = 0; e < ne; ++e)
            if ((mask >> e) & 1) comp.unite(all_edges[e].first, all_edges[e].second);
        std::set<std::uint64_t> members;
        for (std::uint64_t spins = 0; spins < (1ull << n_sites); ++spins) {
            bool ok = true;
            for (int i = 0; i < n_sites && ok; ++i)
                ok = ((spins >> i) & 1) == ((spins >> comp.find(i)) & 1);
            if (ok) members.insert(spins);
        }
        dg.labels.push_back(label);
        dg.h.push_back(members.size());
        dg.phi.push_back(std::move(members));
        edge_masks.push_back(mask);
    }
    std::vector<std::pair<int, int>> undirected;
    for (int u = 0; u < dg.n_vertices(); ++u)
        for (int v = u + 1; v < dg.n_vertices(); ++v)
            if (std::popcount(edge_masks[u] ^ edge_masks[v]) == 1) undirected.push_back({u, v});
    orient_edges(dg, undirected);
    return dg;
}

CollapsingMap collapse(const EncodingDigraph& dg, int tail, int head) {
    if (!dg.arcs.count({tail, head}))
        throw std::invalid_argument("(tail, head) is not an arc of the digraph");
    return {tail, head};
}

int apply_composition(const std::vector<CollapsingMap>& maps, int v) {
    for (const auto& m : maps) v = m(v);
    return v;
}

std::vector<std::pair<int, int>> check_condition_R(const EncodingDigraph& dg) {
    const int n = dg.n_vertices();
    std::vector<std::vector<int>> out(n);
    for (const auto& [u, v] : dg.arcs) out[u].push_back(v);

    auto subset = [&](int a, int b) {  // phi[a] subset of phi[b]
        return std::includes(dg.phi[b].begin(), dg.phi[b].end(), dg.phi[a].begin(),
                             dg.phi[a].end());
    };

    // Coarsening paths from u to v must stay inside the subset chain
    // phi(v) <= phi(w) <= phi(u); sideways steps that leave the chain do not
    // witness the coarse-graining. Encodings with equal member sets are
    // interchangeable as targets.
    std::vector<std::pair<int, int>> violations;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (v == u || !subset(v, u)) continue;
            std::vector<char> seen(n, 0);
            std::deque<int> queue{u};
            seen[u] = 1;
            bool reached = dg.phi[u] == dg.phi[v];
            while (!queue.empty() && !reached) {
                int w = queue.front();
                queue.pop_front();
                for (int x : out[w]) {
                    if (seen[x] || !subset(v, x) || !subset(x, u)) continue;
                    if (dg.phi[x] == dg.phi[v]) {
                        reached = true;
                        break;
                    }
                    seen[x] = 1;
                    queue.push_back(x);
                }
            }
            if (!reached) violations.push_back({u, v});
        }
    }
    return violations;
}

}  // namespace cover

#include "cover/npp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace cover {

void validate_npp(const NppInstance& inst) {
    if (inst.numbers.empty()) throw std::invalid_argument("NPP instance needs at least one number");
    for (double a : inst.numbers)
        if (!(a > 0.0)) throw std::invalid_argument("NPP numbers must be positive");
}

double npp_cost(const NppInstance& inst, const SignVector& s) {
    validate_npp(inst);
    if (s.size() != inst.numbers.size())
        throw std::invalid_argument("sign vector length does not match instance");
    double sum = 0.0;
    for (size_t i = 0; i < s.size(); ++i) sum += s[i] * inst.numbers[i];
    return std::abs(sum);
}

CoarseNpp coarse_npp(const NppInstance& inst, const Prepartition& y) {
    validate_npp(inst);
    const int n = static_cast<int>(inst.numbers.size());
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("prepartition length does not match instance");
    for (int c : y)
        if (c < 1 || c > n) throw std::invalid_argument("cluster id out of range");
    std::vector<double> sums(n + 1, 0.0);
    std::vector<char> used(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        sums[y[i]] += inst.numbers[i];
        used[y[i]] = 1;
    }
    CoarseNpp coarse;
    for (int c = 1; c <= n; ++c) {
        if (used[c]) {
            coarse.cluster_ids.push_back(c);
            coarse.instance.numbers.push_back(sums[c]);
        }
    }
    return coarse;
}

KkResult kk_differencing(const NppInstance& inst) {
    validate_npp(inst);
    const int n = static_cast<int>(inst.numbers.size());
    std::vector<double> val(inst.numbers);
    std::vector<int> pos_child(2 * n - 1, -1), neg_child(2 * n - 1, -1);
    val.resize(2 * n - 1, 0.0);

    // max-heap on (value, then lower node id); node ids make ties deterministic
    auto lower_priority = [&](int a, int b) {
        return val[a] < val[b] || (val[a] == val[b] && a > b);
    };
    std::priority_queue<int, std::vector<int>, decltype(lower_priority)> heap(lower_priority);
    for (int i = 0; i < n; ++i) heap.push(i);

    int next_id = n;
    while (heap.size() > 1) {
        int u = heap.top();
        heap.pop();
        int v = heap.top();
        heap.pop();
        val[next_id] = val[u] - val[v];  // u is the larger; v gets the opposite sign
        pos_child[next_id] = u;
        neg_child[next_id] = v;
        heap.push(next_id);
        ++next_id;
    }
    int root = heap.top();

    SignVector signs(n, 1);
    std::vector<int> node_sign(2 * n - 1, 1);
    for (int id = root; id >= 0; --id) {
        if (pos_child[id] < 0) {
            if (id < n) signs[id] = node_sign[id];
            continue;
        }
        node_sign[pos_child[id]] = node_sign[id];
        node_sign[neg_child[id]] = -node_sign[id];
    }
    return {val[root], signs};
}

KkResult npp_heuristic_G(const NppInstance& inst, const Prepartition& y) {
    CoarseNpp coarse = coarse_npp(inst, y);
    KkResult kk = kk_differencing(coarse.instance);

    std::vector<int> coarse_index(inst.numbers.size() + 1, -1);
    for (size_t c = 0; c < coarse.cluster_ids.size(); ++c) coarse_index[coarse.cluster_ids[c]] = c;
    SignVector lifted(inst.numbers.size());
    for (size_t i = 0; i < inst.numbers.size(); ++i) lifted[i] = kk.signs[coarse_index[y[i]]];

    double cost = npp_cost(inst, lifted);
    if (std::abs(cost - kk.discrepancy) > 1e-9 * (1.0 + std::abs(kk.discrepancy)))
        throw std::logic_error("lifted sign vector does not reproduce the KK discrepancy");
    return {kk.discrepancy, lifted};
}

WalkTrace<Prepartition> npp_adaptive_walk(const NppInstance& inst, long long t_max,
                                          std::uint64_t seed,
                                          const std::vector<long long>& record_at) {
    validate_npp(inst);
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    const int n = static_cast<int>(inst.numbers.size());
    Rng rng = Rng::stream(seed, 0);

    std::vector<long long> schedule = record_at;
    std::sort(schedule.begin(), schedule.end());
    size_t cursor = 0;
    auto record = [&](std::vector<WalkSample>& samples, long long t, double value) {
        while (cursor < schedule.size() && schedule[cursor] == t) {
            samples.push_back({t, value});
            ++cursor;
        }
    };

    Prepartition y(n);
    for (int i = 0; i < n; ++i) y[i] = i + 1;
    double g = npp_heuristic_G(inst, y).discrepancy;
    WalkTrace<Prepartition> trace{{}, y, g, y, seed};
    record(trace.samples, 0, g);
    for (long long t = 1; t <= t_max; ++t) {
        int idx = static_cast<int>(rng.below(n));
        int cluster = 1 + static_cast<int>(rng.below(n));
        Prepartition proposal = y;
        proposal[idx] = cluster;
        double g_new = npp_heuristic_G(inst, proposal).discrepancy;
        if (g_new <= g) {
            y = std::move(proposal);
            g = g_new;
        }
        record(trace.samples, t, g);
    }
    trace.final_state = y;
    trace.best_state = y;
    trace.best_value = g;
    return trace;
}

KkResult npp_brute_force(const NppInstance& inst) {
    validate_npp(inst);
    const int n = static_cast<int>(inst.numbers.size());
    if (n > 24) throw std::invalid_argument("brute force limited to N <= 24");
    SignVector s(n), best(n);
    double best_cost = 0.0;
    bool have = false;
    for (std::uint64_t code = 0; code < (1ull << n); ++code) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += ((code >> i) & 1 ? 1 : -1) * inst.numbers[i];
        double cost = std::abs(sum);
        if (!have || cost < best_cost) {
            have = true;
            best_cost = cost;
            for (int i = 0; i < n; ++i) best[i] = (code >> i) & 1 ? 1 : -1;
        }
    }
    return {best_cost, best};
}

}  // namespace cover

#include "cover/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace cover {

namespace {

std::vector<long long> sorted_schedule(const std::vector<long long>& record_at) {
    std::vector<long long> s = record_at;
    std::sort(s.begin(), s.end());
    return s;
}

void record_step(std::vector<WalkSample>& samples, const std::vector<long long>& schedule,
                 size_t& cursor, long long t, double value) {
    while (cursor < schedule.size() && schedule[cursor] == t) {
        samples.push_back({t, value});
        ++cursor;
    }
}

SpinConfig uniform_config(int n, Rng& rng) {
    SpinConfig x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.below(2) ? 1 : -1;
    return x;
}

// One adaptive walk segment in place; returns the final (= minimal) energy.
double direct_walk_segment(const SpinGlassInstance& inst, SpinConfig& x, double& f,
                           long long steps, Rng& rng) {
    const int n = inst.n_sites();
    for (long long t = 0; t < steps; ++t) {
        int i = static_cast<int>(rng.below(n));
        double delta = energy_delta(inst, x, i);
        if (delta <= 0.0) {
            x[i] = -x[i];
            f += delta;
        }
    }
    return f;
}

}  // namespace

WalkTrace<Forest> adaptive_walk_encoded(const SpinGlassInstance& inst, long long t_max,
                                        std::uint64_t seed,
                                        const std::vector<long long>& record_at) {
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    Rng rng = Rng::stream(seed, 0);
    auto schedule = sorted_schedule(record_at);
    size_t cursor = 0;

    Forest y(inst.n_sites());
    double g = heuristic_G(inst, y).value;
    WalkTrace<Forest> trace{{}, y, g, y, seed};
    record_step(trace.samples, schedule, cursor, 0, g);
    for (long long t = 1; t <= t_max; ++t) {
        Forest proposal = propose_forest_move(y, rng);
        double g_new = heuristic_G(inst, proposal).value;
        if (g_new <= g) {
            y = std::move(proposal);
            g = g_new;
        }
        record_step(trace.samples, schedule, cursor, t, g);
    }
    trace.final_state = y;
    trace.best_state = y;
    trace.best_value = g;
    return trace;
}

WalkTrace<SpinConfig> adaptive_walk_direct(const SpinGlassInstance& inst, long long t_max,
                                           std::uint64_t seed,
                                           const std::vector<long long>& record_at) {
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    Rng rng = Rng::stream(seed, 0);
    auto schedule = sorted_schedule(record_at);
    size_t cursor = 0;

    SpinConfig x = uniform_config(inst.n_sites(), rng);
    double f = energy(inst, x);
    WalkTrace<SpinConfig> trace{{}, x, f, x, seed};
    record_step(trace.samples, schedule, cursor, 0, f);
    const int n = inst.n_sites();
    for (long long t = 1; t <= t_max; ++t) {
        int i = static_cast<int>(rng.below(n));
        double delta = energy_delta(inst, x, i);
        if (delta <= 0.0) {
            x[i] = -x[i];
            f += delta;
        }
        record_step(trace.samples, schedule, cursor, t, f);
    }
    trace.final_state = x;
    trace.best_state = x;
    trace.best_value = f;
    return trace;
}

RestartSummary restart_walk_direct(const SpinGlassInstance& inst, long long t_total,
                                   long long tau, std::uint64_t seed) {
    if (tau < 1 || t_total < 1 || t_total % tau != 0)
        throw std::invalid_argument("tau must be positive and divide t_total");
    RestartSummary summary{t_total, tau, {}, 0.0};
    const long long n_segments = t_total / tau;
    summary.minima.reserve(n_segments);
    for (long long k = 0; k < n_segments; ++k) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(k));
        SpinConfig x = uniform_config(inst.n_sites(), rng);
        double f = energy(inst, x);
        summary.minima.push_back(direct_walk_segment(inst, x, f, tau, rng));
    }
    summary.eta_min_overall = *std::min_element(summary.minima.begin(), summary.minima.end());
    return summary;
}

}  // namespace cover

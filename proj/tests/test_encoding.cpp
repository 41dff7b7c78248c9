#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cover/analysis.hpp"
#include "cover/dsu.hpp"
#include "cover/encoding.hpp"
#include "cover/rng.hpp"

using namespace cover;

namespace {

Forest forest_from(int n, std::initializer_list<std::pair<int, int>> edges) {
    Forest y(n);
    for (const auto& [i, j] : edges) y.add_edge(i, j);
    return y;
}

CoarseConfig coarse_from_code(int m, std::uint64_t code) {
    CoarseConfig z(m);
    for (int c = 0; c < m; ++c) z[c] = (code >> c) & 1 ? 1 : -1;
    return z;
}

Forest random_forest(int n, Rng& rng) {
    int target = static_cast<int>(rng.below(n));
    return surrogate_forest(n, target, rng.next());
}

}  // namespace

TEST_CASE("components") {
    Forest empty(4);
    auto part = components(empty);
    CHECK(part.size() == 4);
    for (int s = 0; s < 4; ++s) CHECK(part.component_of[s] == s);

    auto chain = forest_from(4, {{0, 1}, {1, 2}});
    auto part2 = components(chain);
    CHECK(part2.size() == 2);
    CHECK(part2.components[0] == std::vector<int>{0, 1, 2});
    CHECK(part2.components[1] == std::vector<int>{3});

    auto tree = forest_from(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(components(tree).size() == 1);
}

TEST_CASE("forest edge bookkeeping") {
    Forest y(4);
    y.add_edge(0, 1);
    y.add_edge(1, 2);
    CHECK_THROWS_AS(y.add_edge(0, 2), std::invalid_argument);  // cycle
    CHECK_THROWS_AS(y.add_edge(1, 0), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(y.add_edge(1, 1), std::invalid_argument);
    y.remove_edge(1, 0);
    CHECK(!y.has_edge(0, 1));
    CHECK_THROWS_AS(y.remove_edge(0, 3), std::invalid_argument);
}

TEST_CASE("coarse graining") {
    auto inst = gen_grid_instance(3, 21);

    Forest empty(9);
    auto coarse = coarse_grain(inst, empty);
    CHECK(coarse.n_components == 9);
    CHECK(coarse.offset == 0.0);
    CHECK(coarse.couplings.size() == inst.bonds().size());

    Forest tree(9);
    for (int s = 1; s < 9; ++s) tree.add_edge(0, s);
    auto one = coarse_grain(inst, tree);
    CHECK(one.n_components == 1);
    CHECK(one.couplings.empty());
    double total = 0.0;
    for (const auto& b : inst.bonds()) total += b.a;
    CHECK(one.offset == doctest::Approx(total).epsilon(1e-12));

    SpinGlassInstance with_fields(2, {{0, 1, 1.0}}, {0.5, 0.0});
    CHECK_THROWS_AS(coarse_grain(with_fields, Forest(2)), std::invalid_argument);
}

TEST_CASE("lift") {
    Forest singletons(3);
    CHECK(lift(singletons, {1, -1, 1}) == SpinConfig{1, -1, 1});

    auto tree = forest_from(3, {{0, 1}, {1, 2}});
    CHECK(lift(tree, {1}) == SpinConfig{1, 1, 1});

    auto pair = forest_from(3, {{0, 1}});
    CHECK(lift(pair, {1, -1}) == SpinConfig{1, 1, -1});

    CHECK_THROWS_AS(lift(pair, CoarseConfig{1}), std::invalid_argument);
}

TEST_CASE("lifted-energy identity, randomized") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        auto inst = gen_grid_instance(4, rng.next());
        Forest y = random_forest(16, rng);
        auto coarse = coarse_grain(inst, y);
        CoarseConfig z = coarse_from_code(coarse.n_components, rng.next());
        double lhs = energy(inst, lift(y, z));
        double rhs = coarse_energy(coarse, z) + coarse.offset;
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("oracle F") {
    // empty forest on a tiny instance: global brute force
    SpinGlassInstance tri(3, {{0, 1, -2.0}, {0, 2, 1.0}, {1, 2, 0.5}}, {0.0, 0.0, 0.0});
    auto res = oracle_F(tri, Forest(3));
    // enumeration oracle over the 8 sign vectors
    double best = 1e100;
    for (std::uint64_t code = 0; code < 8; ++code)
        best = std::min(best, energy(tri, coarse_from_code(3, code)));
    CHECK(best == -3.5);
    CHECK(res.value == doctest::Approx(-3.5).epsilon(1e-12));
    CHECK(energy(tri, res.config) == doctest::Approx(res.value).epsilon(1e-12));

    // two components with cross coupling 3: antiparallel choice
    SpinGlassInstance two(3, {{0, 1, 0.4}, {0, 2, 1.3}, {1, 2, 1.3}}, {0.0, 0.0, 0.0});
    auto pair = forest_from(3, {{0, 1}});
    auto coarse = coarse_grain(two, pair);
    REQUIRE(coarse.couplings.size() == 1);
    CHECK(coarse.couplings.begin()->second == doctest::Approx(2.6));
    auto res2 = oracle_F(two, pair);
    CHECK(res2.value == doctest::Approx(-2.6 + coarse.offset).epsilon(1e-12));
}

TEST_CASE("heuristic G") {
    // two components, single decision
    SpinGlassInstance two(3, {{0, 1, 0.4}, {0, 2, 1.3}, {1, 2, 1.7}}, {0.0, 0.0, 0.0});
    auto pair = forest_from(3, {{0, 1}});
    auto coarse = coarse_grain(two, pair);
    auto g = heuristic_G(two, pair);
    CHECK(g.value == doctest::Approx(-3.0 + coarse.offset).epsilon(1e-12));

    // three-component toy: merge the -2 pair, then antiparallel
    SpinGlassInstance tri(3, {{0, 1, -2.0}, {0, 2, 1.0}, {1, 2, 0.5}}, {0.0, 0.0, 0.0});
    auto g2 = heuristic_G(tri, Forest(3));
    CHECK(g2.value == doctest::Approx(-3.5).epsilon(1e-12));
    CHECK(g2.value == doctest::Approx(oracle_F(tri, Forest(3)).value).epsilon(1e-12));

    // all couplings zero
    SpinGlassInstance zero(4, {{0, 1, 0.0}, {2, 3, 0.0}}, {0.0, 0.0, 0.0, 0.0});
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Forest y = random_forest(4, rng);
        CHECK(heuristic_G(zero, y).value == 0.0);
    }
}

TEST_CASE("F <= G, equality with at most two components") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = gen_grid_instance(4, rng.next());
        // 4..15 edges keeps oracle_F enumeration small
        Forest y = surrogate_forest(16, 4 + static_cast<int>(rng.below(12)), rng.next());
        auto f = oracle_F(inst, y);
        auto g = heuristic_G(inst, y);
        CHECK(f.value <= g.value + 1e-9);
        CHECK(energy(inst, g.config) == doctest::Approx(g.value).epsilon(1e-12));
        if (components(y).size() <= 2) CHECK(f.value == doctest::Approx(g.value).epsilon(1e-12));
    }
    // forced <= 2 components
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = gen_grid_instance(3, rng.next());
        Forest y = surrogate_forest(9, 8 - static_cast<int>(rng.below(2)), rng.next());
        REQUIRE(components(y).size() <= 2);
        CHECK(oracle_F(inst, y).value == doctest::Approx(heuristic_G(inst, y).value).epsilon(1e-12));
    }
}

TEST_CASE("phi-consistency of oracle F") {
    Rng rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = gen_grid_instance(3, rng.next());
        Forest y = random_forest(9, rng);
        auto part = components(y);
        if (part.size() > 12) continue;
        double best = 1e100;
        for (std::uint64_t code = 0; code < (1ull << part.size()); ++code)
            best = std::min(best, energy(inst, lift(y, coarse_from_code(part.size(), code))));
        CHECK(oracle_F(inst, y).value == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("forest moves") {
    Rng rng(9);
    Forest empty(5);
    Forest next = propose_forest_move(empty, rng);
    CHECK(next.edges().size() == 1);  // all sites are singleton components

    Forest tree(5);
    for (int s = 1; s < 5; ++s) tree.add_edge(s - 1, s);
    Forest after = propose_forest_move(tree, rng);
    CHECK(after.edges().size() == 3);  // spanning tree: any draw removes an edge

    // acyclicity and validity preserved over long move sequences
    Forest y(100);
    Rng walker(123);
    for (int step = 0; step < 100000; ++step) y = propose_forest_move(y, walker);
    Dsu dsu(100);
    int comps = 100;
    for (const auto& [a, b] : y.edges()) {
        CHECK(dsu.unite(a, b));  // any failure would mean a cycle
        --comps;
    }
    CHECK(static_cast<int>(y.edges().size()) == 100 - comps);
}

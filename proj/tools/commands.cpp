#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cover/analysis.hpp"
#include "cover/encoding.hpp"
#include "cover/io.hpp"
#include "cover/npp.hpp"
#include "cover/search.hpp"
#include "cover/semigroup.hpp"
#include "cover/spinglass.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cover::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string join_args(int argc, const char* const* argv) {
    std::string line;
    for (int i = 0; i < argc; ++i) {
        if (i) line += " ";
        line += argv[i];
    }
    return line;
}

void prepare_outdir(const fs::path& out, bool force) {
    if (fs::exists(out / "manifest.json") && !force)
        throw std::invalid_argument("output directory " + out.string() +
                                    " already holds results; pass --force to overwrite");
    fs::create_directories(out);
}

std::vector<long long> parse_steps(const std::string& text) {
    std::vector<long long> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoll(item));
    }
    if (values.empty()) throw std::invalid_argument("empty step list");
    return values;
}

std::vector<fs::path> sorted_json_files(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw std::invalid_argument(dir.string() + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            entry.path().filename() != "manifest.json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::invalid_argument("no .json inputs in " + dir.string());
    return files;
}

int cmd_gen(const std::string& cmdline, int L, int count, std::uint64_t seed, const fs::path& out,
            bool force) {
    prepare_outdir(out, force);
    RunManifest manifest{cmdline, seed, Rng::kAlgorithm, {}, {}, kVersion};
    manifest.parameters = {{"L", std::to_string(L)}, {"count", std::to_string(count)}};
    for (int k = 0; k < count; ++k) {
        std::uint64_t inst_seed = mix64(seed ^ mix64(static_cast<std::uint64_t>(k) + 1));
        SpinGlassInstance inst = gen_grid_instance(L, inst_seed);
        char name[64];
        std::snprintf(name, sizeof(name), "instance_%03d.json", k);
        fs::path path = out / name;
        if (fs::exists(path) && !force)
            throw std::invalid_argument(path.string() + " exists; pass --force to overwrite");
        save_instance(inst, path);
        manifest.input_hashes.push_back({name, file_hash(path)});
    }
    write_manifest(manifest, out / "manifest.json");
    return 0;
}

int cmd_walk(const std::string& cmdline, const std::string& kind, const fs::path& instance_path,
             long long t, std::uint64_t seed, const std::string& record, const fs::path& out,
             bool force) {
    prepare_outdir(out, force);
    SpinGlassInstance inst = load_instance(instance_path);
    std::vector<long long> record_at = record.empty() ? std::vector<long long>{t}
                                                      : parse_steps(record);
    {
        CsvWriter csv(out / "trace.csv", {"t", "value"});
        if (kind == "encoded") {
            auto trace = adaptive_walk_encoded(inst, t, seed, record_at);
            for (const auto& s : trace.samples)
                csv.row({std::to_string(s.t), csv_num(s.value)});
            std::ofstream(out / "final_state.json") << forest_to_json(trace.final_state);
        } else if (kind == "direct") {
            auto trace = adaptive_walk_direct(inst, t, seed, record_at);
            for (const auto& s : trace.samples)
                csv.row({std::to_string(s.t), csv_num(s.value)});
            json state;
            state["spins"] = trace.final_state;
            std::ofstream(out / "final_state.json") << state.dump(2) << "\n";
        } else {
            throw std::invalid_argument("walk kind must be encoded or direct");
        }
    }
    RunManifest manifest{cmdline, seed, Rng::kAlgorithm,
                         {{instance_path.filename().string(), file_hash(instance_path)}},
                         {{"kind", kind}, {"t", std::to_string(t)}, {"record", record}},
                         kVersion};
    write_manifest(manifest, out / "manifest.json");
    return 0;
}

struct CompareRow {
    std::string instance_id;
    long long t;
    long long tau;
    double eta_min;
    double p;
};

int cmd_compare(const std::string& cmdline, const fs::path& instances_dir,
                const std::string& t_list, const std::string& tau_list, long long samples,
                std::uint64_t seed, const fs::path& out, int threads, bool force) {
    prepare_outdir(out, force);
    fs::create_directories(out / "states");
    auto files = sorted_json_files(instances_dir);
    auto ts = parse_steps(t_list);
    auto taus = parse_steps(tau_list);
    std::sort(ts.begin(), ts.end());
    long long t_max = ts.back();

    auto run_instance = [&](size_t idx) {
        SpinGlassInstance inst = load_instance(files[idx]);
        std::uint64_t walk_seed = mix64(seed ^ mix64(2 * idx + 1));
        std::uint64_t pval_seed = mix64(seed ^ mix64(2 * idx + 2));
        auto trace = adaptive_walk_encoded(inst, t_max, walk_seed, ts);
        std::ofstream(out / "states" / (files[idx].stem().string() + "_forest.json"))
            << forest_to_json(trace.final_state);
        // One baseline ensemble per tau, all at the full budget t_max; the
        // p-value at time t compares the walk's value so far against it.
        std::vector<CompareRow> rows;
        for (long long tau : taus) {
            if (tau > t_max || t_max % tau != 0) continue;
            std::vector<double> minima;
            minima.reserve(samples);
            for (long long k = 0; k < samples; ++k)
                minima.push_back(
                    restart_walk_direct(inst, t_max, tau,
                                        mix64(pval_seed ^ mix64(static_cast<std::uint64_t>(k))))
                        .eta_min_overall);
            for (long long t : ts) {
                double eta_min = 0.0;
                for (const auto& s : trace.samples)
                    if (s.t == t) eta_min = s.value;
                long long n_leq = std::count_if(minima.begin(), minima.end(),
                                                [&](double m) { return m <= eta_min; });
                double p = static_cast<double>(n_leq) / static_cast<double>(samples);
                rows.push_back({files[idx].stem().string(), t, tau, eta_min, p});
            }
        }
        return rows;
    };

    std::vector<std::vector<CompareRow>> all(files.size());
    if (threads <= 1) {
        for (size_t i = 0; i < files.size(); ++i) all[i] = run_instance(i);
    } else {
        std::vector<std::future<std::vector<CompareRow>>> futures;
        for (size_t i = 0; i < files.size(); ++i)
            futures.push_back(std::async(std::launch::async, run_instance, i));
        for (size_t i = 0; i < files.size(); ++i) all[i] = futures[i].get();
    }

    CsvWriter csv(out / "pvalues.csv", {"instance_id", "t", "tau", "eta_min", "p"});
    std::map<std::pair<long long, long long>, std::vector<double>> grouped;
    for (const auto& rows : all) {
        for (const auto& r : rows) {
            csv.row({r.instance_id, std::to_string(r.t), std::to_string(r.tau),
                     csv_num(r.eta_min), csv_num(r.p)});
            grouped[{r.t, r.tau}].push_back(r.p);
        }
    }
    CsvWriter summary(out / "summary.csv", {"t", "tau", "n_instances", "mean_p", "sd_p"});
    for (const auto& [key, ps] : grouped) {
        double mean = 0.0;
        for (double p : ps) mean += p;
        mean /= ps.size();
        double var = 0.0;
        for (double p : ps) var += (p - mean) * (p - mean);
        double sd = ps.size() > 1 ? std::sqrt(var / (ps.size() - 1)) : 0.0;
        summary.row({std::to_string(key.first), std::to_string(key.second),
                     std::to_string(ps.size()), csv_num(mean), csv_num(sd)});
    }

    RunManifest manifest{cmdline, seed, Rng::kAlgorithm, {}, {}, kVersion};
    for (const auto& f : files)
        manifest.input_hashes.push_back({f.filename().string(), file_hash(f)});
    manifest.parameters = {{"t", t_list},
                           {"tau", tau_list},
                           {"samples", std::to_string(samples)},
                           {"threads", std::to_string(threads)}};
    write_manifest(manifest, out / "manifest.json");
    return 0;
}

int cmd_clusters(const std::string& cmdline, const fs::path& states_dir,
                 std::uint64_t surrogate_seed, const fs::path& out, bool force) {
    prepare_outdir(out, force);
    auto files = sorted_json_files(states_dir);

    CsvWriter csv(out / "clusters.csv", {"instance_id", "kind", "largest", "second_largest"});
    std::map<std::string, std::vector<int>> all_sizes;  // kind -> component sizes
    ScatterSeries encoded{"encoded", "green", {}};
    ScatterSeries surrogate{"surrogate", "blue", {}};
    for (size_t idx = 0; idx < files.size(); ++idx) {
        std::ifstream in(files[idx]);
        std::stringstream ss;
        ss << in.rdbuf();
        Forest y = forest_from_json(ss.str());
        Forest sur = surrogate_forest(y.n_sites(), static_cast<int>(y.edges().size()),
                                      mix64(surrogate_seed ^ mix64(idx + 1)));
        auto emit = [&](const std::string& kind, const Forest& f, ScatterSeries& series) {
            ClusterStats stats = cluster_stats(f);
            csv.row({files[idx].stem().string(), kind, std::to_string(stats.largest),
                     std::to_string(stats.second_largest)});
            series.points.push_back({static_cast<double>(stats.largest),
                                     static_cast<double>(stats.second_largest)});
            auto& sizes = all_sizes[kind];
            sizes.insert(sizes.end(), stats.sizes.begin(), stats.sizes.end());
        };
        emit("encoded", y, encoded);
        emit("surrogate", sur, surrogate);
    }

    CsvWriter cumulative(out / "cumulative.csv", {"kind", "size", "fraction_geq"});
    for (auto& [kind, sizes] : all_sizes) {
        std::sort(sizes.begin(), sizes.end());
        int max_size = sizes.back();
        for (int s = 1; s <= max_size; ++s) {
            auto it = std::lower_bound(sizes.begin(), sizes.end(), s);
            double frac = static_cast<double>(sizes.end() - it) / sizes.size();
            cumulative.row({kind, std::to_string(s), csv_num(frac)});
        }
    }
    write_svg_scatter(out / "clusters.svg", "largest cluster", "second largest cluster",
                      {encoded, surrogate});

    RunManifest manifest{cmdline, surrogate_seed, Rng::kAlgorithm, {}, {}, kVersion};
    for (const auto& f : files)
        manifest.input_hashes.push_back({f.filename().string(), file_hash(f)});
    write_manifest(manifest, out / "manifest.json");
    return 0;
}

int cmd_npp(const std::string& cmdline, const fs::path& numbers_path, const std::string& mode,
            long long t, std::uint64_t seed, const fs::path& out, bool force) {
    prepare_outdir(out, force);
    NppInstance inst = load_npp(numbers_path);
    {
        CsvWriter csv(out / "result.csv", {"t", "value"});
        if (mode == "kk") {
            KkResult kk = kk_differencing(inst);
            csv.row({"0", csv_num(kk.discrepancy)});
            json doc;
            doc["signs"] = kk.signs;
            std::ofstream(out / "final_state.json") << doc.dump(2) << "\n";
        } else if (mode == "walk") {
            std::vector<long long> record_at;
            for (long long step = 0; step <= t; ++step) record_at.push_back(step);
            auto trace = npp_adaptive_walk(inst, t, seed, record_at);
            for (const auto& s : trace.samples)
                csv.row({std::to_string(s.t), csv_num(s.value)});
            json doc;
            doc["prepartition"] = trace.final_state;
            std::ofstream(out / "final_state.json") << doc.dump(2) << "\n";
        } else {
            throw std::invalid_argument("npp mode must be kk or walk");
        }
    }
    RunManifest manifest{cmdline, seed, Rng::kAlgorithm,
                         {{numbers_path.filename().string(), file_hash(numbers_path)}},
                         {{"mode", mode}, {"t", std::to_string(t)}},
                         kVersion};
    write_manifest(manifest, out / "manifest.json");
    return 0;
}

int cmd_semigroup_check(const std::string& cmdline, const std::string& space, int N,
                        const fs::path& out, bool force) {
    prepare_outdir(out, force);
    EncodingDigraph dg;
    if (space == "schema")
        dg = build_schema_digraph(N);
    else if (space == "forest")
        dg = build_forest_digraph(N);
    else
        throw std::invalid_argument("space must be schema or forest");
    auto violations = check_condition_R(dg);

    json doc;
    doc["space"] = space;
    doc["N"] = N;
    doc["n_vertices"] = dg.n_vertices();
    doc["n_arcs"] = dg.arcs.size();
    json list = json::array();
    for (const auto& [u, v] : violations) list.push_back({dg.labels[u], dg.labels[v]});
    doc["violations"] = std::move(list);
    std::ofstream(out / "violations.json") << doc.dump(2) << "\n";
    std::cout << "condition (R): " << violations.size() << " violation(s) on " << dg.n_vertices()
              << " vertices\n";

    RunManifest manifest{cmdline, 0, Rng::kAlgorithm, {},
                         {{"space", space}, {"N", std::to_string(N)}}, kVersion};
    write_manifest(manifest, out / "manifest.json");
    return 0;
}

int cmd_ground_truth(const std::string& cmdline, const fs::path& instance_path,
                     const fs::path& out, bool force) {
    prepare_outdir(out, force);
    SpinGlassInstance inst = load_instance(instance_path);
    GroundState gs = brute_force_ground_state(inst);
    json doc;
    doc["energy"] = gs.energy;
    doc["config"] = gs.config;
    std::ofstream(out / "ground_truth.json") << doc.dump(2) << "\n";

    RunManifest manifest{cmdline, 0, Rng::kAlgorithm,
                         {{instance_path.filename().string(), file_hash(instance_path)}},
                         {},
                         kVersion};
    write_manifest(manifest, out / "manifest.json");
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"cover-encoding experiment harness"};
    app.require_subcommand(1);
    std::string cmdline = join_args(argc, argv);

    int L = 3, count = 1, N = 1, threads = 1;
    long long t = 1000, samples = 100;
    std::uint64_t seed = 1;
    std::string out = "out", instance, kind = "encoded", record, t_list = "1000",
                tau_list = "100", mode = "kk", space = "schema", numbers, states, instances;
    bool force = false;

    auto* gen = app.add_subcommand("gen", "generate seeded grid instances");
    gen->add_option("--L", L, "grid side length (>= 3)")->required();
    gen->add_option("--count", count, "number of instances");
    gen->add_option("--seed", seed, "master seed");
    gen->add_option("--out", out, "output directory");
    gen->add_flag("--force", force, "overwrite existing outputs");

    auto* walk = app.add_subcommand("walk", "run a single adaptive walk");
    walk->add_option("--kind", kind, "encoded|direct");
    walk->add_option("--instance", instance, "instance file")->required();
    walk->add_option("--t", t, "walk length");
    walk->add_option("--seed", seed, "seed");
    walk->add_option("--record", record, "comma list of record steps");
    walk->add_option("--out", out, "output directory");
    walk->add_flag("--force", force, "overwrite existing outputs");

    auto* compare = app.add_subcommand("compare", "encoded walks vs restart-walk p-values");
    compare->add_option("--instances", instances, "directory of instance files")->required();
    compare->add_option("--t", t_list, "comma list of walk lengths");
    compare->add_option("--tau", tau_list, "comma list of restart periods");
    compare->add_option("--samples", samples, "restart walks per p-value");
    compare->add_option("--seed", seed, "master seed");
    compare->add_option("--out", out, "output directory");
    compare->add_option("--threads", threads, "worker threads");
    compare->add_flag("--force", force, "overwrite existing outputs");

    auto* clusters = app.add_subcommand("clusters", "cluster statistics vs surrogate forests");
    clusters->add_option("--states", states, "directory of forest state files")->required();
    clusters->add_option("--seed", seed, "surrogate seed");
    clusters->add_option("--out", out, "output directory");
    clusters->add_flag("--force", force, "overwrite existing outputs");

    auto* npp = app.add_subcommand("npp", "number partitioning heuristics");
    npp->add_option("--numbers", numbers, "file with one positive number per line")->required();
    npp->add_option("--mode", mode, "kk|walk");
    npp->add_option("--t", t, "walk length (mode walk)");
    npp->add_option("--seed", seed, "seed");
    npp->add_option("--out", out, "output directory");
    npp->add_flag("--force", force, "overwrite existing outputs");

    auto* semi = app.add_subcommand("semigroup-check", "condition (R) violation report");
    semi->add_option("--space", space, "schema|forest");
    semi->add_option("--N", N, "string length / site count")->required();
    semi->add_option("--out", out, "output directory");
    semi->add_flag("--force", force, "overwrite existing outputs");

    auto* ground = app.add_subcommand("ground-truth", "brute-force ground state dump");
    ground->add_option("--instance", instance, "instance file")->required();
    ground->add_option("--out", out, "output directory");
    ground->add_flag("--force", force, "overwrite existing outputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(cmdline, L, count, seed, out, force);
        if (walk->parsed()) return cmd_walk(cmdline, kind, instance, t, seed, record, out, force);
        if (compare->parsed())
            return cmd_compare(cmdline, instances, t_list, tau_list, samples, seed, out, threads,
                               force);
        if (clusters->parsed()) return cmd_clusters(cmdline, states, seed, out, force);
        if (npp->parsed()) return cmd_npp(cmdline, numbers, mode, t, seed, out, force);
        if (semi->parsed()) return cmd_semigroup_check(cmdline, space, N, out, force);
        if (ground->parsed()) return cmd_ground_truth(cmdline, instance, out, force);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cover::cli

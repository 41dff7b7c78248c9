#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cover/encoding.hpp"
#include "cover/npp.hpp"
#include "cover/spinglass.hpp"

namespace cover {

// Instance files are JSON with fields n_sites, grid {L, periodic}, bonds
// [[i, j, a], ...], fields [b_0, ...], seed. Couplings round-trip exactly.
std::string instance_to_json(const SpinGlassInstance& inst);
SpinGlassInstance instance_from_json(const std::string& text);

SpinGlassInstance load_instance(const std::filesystem::path& path);
void save_instance(const SpinGlassInstance& inst, const std::filesystem::path& path);

// Sorted edge list [[i, j], ...] plus the site count.
std::string forest_to_json(const Forest& y);
Forest forest_from_json(const std::string& text);

NppInstance load_npp(const std::filesystem::path& path);  // one positive decimal per line

// FNV-1a over the file bytes, for run manifests.
std::uint64_t file_hash(const std::filesystem::path& path);

struct CsvWriter {
    explicit CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    ~CsvWriter();
    void row(const std::vector<std::string>& cells);

private:
    std::string buffer_;
    std::filesystem::path path_;
};

std::string csv_num(double v);

struct ScatterSeries {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Minimal static scatter plot.
void write_svg_scatter(const std::filesystem::path& path, const std::string& x_label,
                       const std::string& y_label, const std::vector<ScatterSeries>& series);

struct RunManifest {
    std::string command_line;
    std::uint64_t master_seed = 0;
    std::string rng_algorithm;
    std::vector<std::pair<std::string, std::uint64_t>> input_hashes;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string tool_version;
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

}  // namespace cover

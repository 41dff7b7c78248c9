#include "cover/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cover {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace

std::string instance_to_json(const SpinGlassInstance& inst) {
    json doc;
    doc["n_sites"] = inst.n_sites();
    if (inst.grid()) doc["grid"] = {{"L", inst.grid()->side}, {"periodic", inst.grid()->periodic}};
    json bonds = json::array();
    for (const auto& b : inst.bonds()) bonds.push_back({b.i, b.j, b.a});
    doc["bonds"] = std::move(bonds);
    doc["fields"] = inst.fields();
    doc["seed"] = inst.seed();
    return doc.dump(2) + "\n";
}

SpinGlassInstance instance_from_json(const std::string& text) {
    json doc = json::parse(text);
    std::vector<Bond> bonds;
    for (const auto& b : doc.at("bonds"))
        bonds.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<double>()});
    std::optional<GridMeta> grid;
    if (doc.contains("grid"))
        grid = GridMeta{doc["grid"].at("L").get<int>(), doc["grid"].at("periodic").get<bool>()};
    return SpinGlassInstance(doc.at("n_sites").get<int>(), std::move(bonds),
                             doc.at("fields").get<std::vector<double>>(), grid,
                             doc.value("seed", std::uint64_t{0}));
}

SpinGlassInstance load_instance(const std::filesystem::path& path) {
    return instance_from_json(read_file(path));
}

void save_instance(const SpinGlassInstance& inst, const std::filesystem::path& path) {
    write_file(path, instance_to_json(inst));
}

std::string forest_to_json(const Forest& y) {
    json doc;
    doc["n_sites"] = y.n_sites();
    json edges = json::array();
    for (const auto& [i, j] : y.edges()) edges.push_back({i, j});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

Forest forest_from_json(const std::string& text) {
    json doc = json::parse(text);
    Forest y(doc.at("n_sites").get<int>());
    for (const auto& e : doc.at("edges")) y.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return y;
}

NppInstance load_npp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    NppInstance inst;
    double v;
    while (in >> v) inst.numbers.push_back(v);
    validate_npp(inst);
    return inst;
}

std::uint64_t file_hash(const std::filesystem::path& path) {
    std::string bytes = read_file(path);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path) {
    row(header);
}

CsvWriter::~CsvWriter() {
    try {
        write_file(path_, buffer_);
    } catch (...) {
    }
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += ",";
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") != std::string::npos) {
            buffer_ += '"';
            for (char ch : c) {
                if (ch == '"') buffer_ += '"';
                buffer_ += ch;
            }
            buffer_ += '"';
        } else {
            buffer_ += c;
        }
    }
    buffer_ += "\n";
}

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_svg_scatter(const std::filesystem::path& path, const std::string& x_label,
                       const std::string& y_label, const std::vector<ScatterSeries>& series) {
    double xmax = 1.0, ymax = 1.0;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xmax = std::max(xmax, x);
            ymax = std::max(ymax, y);
        }
    }
    const double w = 480, h = 360, margin = 50;
    auto sx = [&](double x) { return margin + x / xmax * (w - 2 * margin); };
    auto sy = [&](double y) { return h - margin - y / ymax * (h - 2 * margin); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << h - margin << "\" x2=\"" << w - margin
        << "\" y2=\"" << h - margin << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
        << h - margin << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << w / 2 << "\" y=\"" << h - 12 << "\" text-anchor=\"middle\">" << x_label
        << "</text>\n";
    svg << "<text x=\"14\" y=\"" << h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << h / 2 << ")\">" << y_label << "</text>\n";
    double legend_y = margin;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points)
            svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\""
                << s.color << "\" fill-opacity=\"0.7\"/>\n";
        svg << "<circle cx=\"" << w - margin - 110 << "\" cy=\"" << legend_y << "\" r=\"4\" fill=\""
            << s.color << "\"/>\n";
        svg << "<text x=\"" << w - margin - 100 << "\" y=\"" << legend_y + 4 << "\">" << s.name
            << "</text>\n";
        legend_y += 18;
    }
    svg << "</svg>\n";
    write_file(path, svg.str());
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    json doc;
    doc["command_line"] = manifest.command_line;
    doc["master_seed"] = manifest.master_seed;
    doc["rng_algorithm"] = manifest.rng_algorithm;
    json hashes = json::object();
    for (const auto& [name, h] : manifest.input_hashes) hashes[name] = h;
    doc["input_hashes"] = std::move(hashes);
    json params = json::object();
    for (const auto& [k, v] : manifest.parameters) params[k] = v;
    doc["parameters"] = std::move(params);
    doc["tool_version"] = manifest.tool_version;
    doc["timestamp_utc"] = std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::system_clock::now().time_since_epoch())
                               .count();
    write_file(path, doc.dump(2) + "\n");
}

}  // namespace cover

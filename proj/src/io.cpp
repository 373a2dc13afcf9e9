#include "io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "error.hpp"

namespace hnilm {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_watts(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) fail(errc::io_error, "failed to format value");
    return std::string(buf, ptr);
}

void atomic_write(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io_error, "cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out) fail(errc::io_error, "short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) fail(errc::io_error, "cannot rename '" + tmp.string() + "' to '" + path.string() + "'");
}

std::vector<RawSample> load_raw_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open '" + path.string() + "'");

    std::vector<RawSample> samples;
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("timestamp", 0) == 0) continue; // header row
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            fail(errc::parse_error, path.string() + ":" + std::to_string(lineno) + ": expected 'timestamp,power'");
        std::int64_t ts = 0;
        auto tsr = std::from_chars(line.data(), line.data() + comma, ts);
        if (tsr.ec != std::errc{} || tsr.ptr != line.data() + comma)
            fail(errc::parse_error, path.string() + ":" + std::to_string(lineno) + ": bad timestamp");
        // Tolerate extra columns; only the first two are the series.
        auto end = line.find(',', comma + 1);
        if (end == std::string::npos) end = line.size();
        double watts = 0.0;
        auto wr = std::from_chars(line.data() + comma + 1, line.data() + end, watts);
        if (wr.ec != std::errc{} || wr.ptr != line.data() + end)
            fail(errc::parse_error, path.string() + ":" + std::to_string(lineno) + ": bad power value");
        samples.push_back({ts, watts});
    }
    if (samples.empty()) fail(errc::empty_input, "'" + path.string() + "' holds no samples");
    return samples;
}

PowerSeries load_series_csv(const fs::path& path, std::int64_t period) {
    std::vector<RawSample> samples = load_raw_csv(path);
    return regularize(samples, period);
}

void save_series_csv(const PowerSeries& series, const fs::path& path) {
    std::string out = "timestamp,power\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.is_missing(i)) continue;
        out += std::to_string(series.timestamp(i));
        out += ',';
        out += format_watts(series.value(i));
        out += '\n';
    }
    atomic_write(path, out);
}

MeterHierarchy load_hierarchy(const fs::path& json_path, std::int64_t period) {
    std::ifstream in(json_path);
    if (!in) fail(errc::io_error, "cannot open '" + json_path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail(errc::parse_error, json_path.string() + ": " + e.what());
    }
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        fail(errc::parse_error, json_path.string() + ": missing 'nodes' array");

    fs::path base = json_path.parent_path();
    std::vector<MeterNode> nodes;
    std::map<std::string, std::vector<std::string>> children_of;
    std::string root;
    for (const json& jn : doc["nodes"]) {
        MeterNode n;
        n.id = jn.at("id").get<std::string>();
        n.level = level_from_name(jn.at("level").get<std::string>());
        if (jn.contains("parent") && !jn["parent"].is_null()) {
            children_of[jn["parent"].get<std::string>()].push_back(n.id);
        } else {
            if (!root.empty()) fail(errc::invalid_spec, "more than one root node");
            root = n.id;
        }
        if (jn.contains("csv_path") && !jn["csv_path"].is_null()) {
            fs::path csv = base / jn["csv_path"].get<std::string>();
            n.series = load_series_csv(csv, period);
        }
        nodes.push_back(std::move(n));
    }
    if (root.empty()) fail(errc::invalid_spec, "no root node (every node has a parent)");
    for (MeterNode& n : nodes) {
        auto it = children_of.find(n.id);
        if (it != children_of.end()) n.children = it->second;
    }
    return MeterHierarchy(std::move(nodes), root);
}

void save_hierarchy(const MeterHierarchy& h, const fs::path& dir) {
    fs::create_directories(dir);

    std::map<std::string, std::string> parent_of;
    for (const auto& [id, node] : h.nodes())
        for (const std::string& child : node.children) parent_of[child] = id;

    json nodes = json::array();
    for (const auto& [id, node] : h.nodes()) {
        json jn;
        jn["id"] = id;
        jn["level"] = level_name(node.level);
        jn["parent"] = parent_of.count(id) ? json(parent_of.at(id)) : json(nullptr);
        if (node.series) {
            std::string csv_name = id + ".csv";
            save_series_csv(*node.series, dir / csv_name);
            jn["csv_path"] = csv_name;
        } else {
            jn["csv_path"] = nullptr;
        }
        nodes.push_back(jn);
    }
    json doc;
    doc["nodes"] = nodes;
    atomic_write(dir / "hierarchy.json", doc.dump(2) + "\n");
}

} // namespace hnilm

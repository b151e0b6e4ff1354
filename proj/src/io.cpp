#include "morse_bridge/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "morse_bridge/errors.hpp"

namespace morse_bridge::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return in;
}

json intervals_json(const EdgeSet& s)
{
    json out = json::array();
    for (const auto& iv : geometric_realization(s))
        out.push_back({iv.first, iv.last});
    return out;
}

json matrix_json(const IntMatrix& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string six_digits(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string tag_list(const std::vector<IndexTag>& tags)
{
    std::string out;
    for (const auto t : tags) {
        if (!out.empty())
            out += ", ";
        out += to_string(t);
    }
    return out;
}

}  // namespace

DataSet read_csv(std::istream& in, double sigma2)
{
    DataSet data;
    data.sigma2 = sigma2;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty())
            continue;
        if (!header) {
            std::string compact;
            for (char c : row)
                if (c != ' ' && c != '\t')
                    compact += c;
            if (compact != "x,y")
                throw InputError("line " + std::to_string(line_no) + ": expected header x,y");
            header = true;
            continue;
        }
        const auto comma = row.find(',');
        Point p;
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos ||
            !parse_double(row.substr(0, comma), p.x) || !parse_double(row.substr(comma + 1), p.y))
            throw InputError("line " + std::to_string(line_no) + ": malformed row '" + std::string(row) + "'");
        data.points.push_back(p);
    }
    if (!header)
        throw InputError("empty CSV input");
    validate_dataset(data);
    return data;
}

DataSet read_json(std::istream& in, std::optional<double> sigma2)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    DataSet data;
    try {
        for (const auto& p : doc.at("points")) {
            if (!p.is_array() || p.size() != 2)
                throw InputError("every point must be a pair [x, y]");
            data.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        }
        if (sigma2)
            data.sigma2 = *sigma2;
        else if (doc.contains("sigma2"))
            data.sigma2 = doc.at("sigma2").get<double>();
        else
            throw InputError("sigma2 is neither in the file nor given");
    } catch (const json::exception& e) {
        throw InputError(std::string("bad data set: ") + e.what());
    }
    validate_dataset(data);
    return data;
}

DataSet read_dataset_file(const std::string& path, const std::string& format, std::optional<double> sigma2)
{
    std::ifstream in = open(path);
    if (format == "csv") {
        if (!sigma2)
            throw InputError("CSV input needs --sigma2");
        return read_csv(in, *sigma2);
    }
    if (format == "json")
        return read_json(in, sigma2);
    throw InputError("unknown input format " + format);
}

std::vector<std::vector<VertexInterval>> read_lattice(std::istream& in)
{
    std::vector<std::vector<VertexInterval>> blocks;
    try {
        const json doc = json::parse(in);
        if (!doc.is_array())
            throw InputError("lattice file must hold a list of blocks");
        for (const auto& b : doc) {
            std::vector<VertexInterval> block;
            for (const auto& iv : b) {
                if (!iv.is_array() || iv.size() != 2)
                    throw InputError("every interval must be a pair [i, j]");
                block.push_back({iv.at(0).get<std::size_t>(), iv.at(1).get<std::size_t>()});
            }
            blocks.push_back(std::move(block));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid lattice file: ") + e.what());
    }
    return blocks;
}

std::vector<std::vector<VertexInterval>> read_lattice_file(const std::string& path)
{
    std::ifstream in = open(path);
    return read_lattice(in);
}

std::string format_intervals(const EdgeSet& s)
{
    const auto ivs = geometric_realization(s);
    if (ivs.empty())
        return "∅";
    std::string out;
    for (const auto& iv : ivs) {
        if (!out.empty())
            out += " ∪ ";
        out += "[" + std::to_string(iv.first) + "," + std::to_string(iv.last) + "]";
    }
    return out;
}

void write_report(const AnalysisReport& r, std::ostream& out)
{
    json doc;
    const auto& pts = r.data.points;
    doc["dataset"] = {{"points", pts.size()},
                      {"sigma2", r.data.sigma2},
                      {"x_range", {pts.front().x, pts.back().x}}};
    doc["window"] = r.window ? json{r.window->first, r.window->last} : json(nullptr);

    json members = json::array();
    for (std::size_t i = 0; i < r.lattice.size(); ++i)
        members.push_back({{"name", r.lattice_names[i]}, {"intervals", intervals_json(r.lattice[i])}});
    doc["lattice"] = {{"provenance", to_string(r.provenance)}, {"members", members}};

    json bands = json::array();
    for (const auto& ea : r.probability.bands.edges) {
        const std::size_t n = ea.band.edge;
        bands.push_back({{"edge", n},
                         {"gamma", ea.gamma},
                         {"alpha", ea.band.alpha},
                         {"beta", ea.band.beta},
                         {"alpha_vertex", ea.band.band.first},
                         {"beta_vertex", ea.band.band.last},
                         {"probability", r.probability.factor(n)}});
    }
    doc["bands"] = bands;
    doc["total_probability"] = r.probability.total;

    json tiles = json::array();
    for (std::size_t t = 0; t < r.tiling.tiles.size(); ++t) {
        const Tile& tile = r.tiling.tiles[t];
        const TileIndex& ti = r.indices[t];
        json inv = json::array();
        for (const auto& s : ti.invariants)
            inv.push_back({{"charpoly", s.charpoly}, {"traces", s.traces}, {"eventual_rank", s.eventual_rank}});
        json tags = json::array();
        for (const auto tag : ti.tags)
            tags.push_back(to_string(tag));
        tiles.push_back({{"name", tile.name},
                         {"block", intervals_json(tile.block)},
                         {"predecessor", tile.predecessor_name},
                         {"predecessor_block", intervals_json(tile.predecessor)},
                         {"tile", intervals_json(tile.edges)},
                         {"homology_ranks", ti.ranks},
                         {"conley_index", {matrix_json(ti.index.maps[0]), matrix_json(ti.index.maps[1])}},
                         {"invariants", inv},
                         {"tags", tags}});
    }
    doc["tiles"] = tiles;

    json covers = json::array();
    for (const auto& [lo, hi] : r.tiling.graph.covering_relations())
        covers.push_back({r.tiling.tiles[hi].name, r.tiling.tiles[lo].name});
    doc["morse_graph"] = {{"covers", covers},
                          {"note", "indices are compared by characteristic polynomial and traces only"}};
    doc["enclosure"] = r.encloses;
    doc["warnings"] = r.warnings;
    out << doc.dump(2) << '\n';
}

void write_dot(const AnalysisReport& r, std::ostream& out)
{
    out << "digraph morse_graph {\n";
    out << "  node [shape=box];\n";
    for (std::size_t t = 0; t < r.tiling.tiles.size(); ++t) {
        const Tile& tile = r.tiling.tiles[t];
        std::string label = tile.name + "\\n" + format_intervals(tile.edges);
        const std::string tags = tag_list(r.indices[t].tags);
        if (!tags.empty())
            label += "\\n" + tags;
        out << "  \"" << tile.name << "\" [label=\"" << label << "\"];\n";
    }
    for (const auto& [lo, hi] : r.tiling.graph.covering_relations())
        out << "  \"" << r.tiling.tiles[hi].name << "\" -> \"" << r.tiling.tiles[lo].name << "\";\n";
    out << "}\n";
}

void write_bands(const AnalysisReport& r, std::ostream& out)
{
    out << "n,x_left,x_right,y_left,y_right,alpha,beta,probability\n";
    for (const auto& ea : r.probability.bands.edges) {
        const std::size_t n = ea.band.edge;
        const auto seg = segment(r.data, n);
        out << n << ',' << six_digits(seg.x_left) << ',' << six_digits(seg.x_right) << ','
            << six_digits(seg.y_left) << ',' << six_digits(seg.y_right) << ',' << six_digits(ea.band.alpha)
            << ',' << six_digits(ea.band.beta) << ',' << six_digits(r.probability.factor(n)) << '\n';
    }
}

}  // namespace morse_bridge::io

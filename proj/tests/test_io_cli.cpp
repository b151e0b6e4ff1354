#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "morse_bridge/cli.hpp"
#include "morse_bridge/errors.hpp"
#include "morse_bridge/io.hpp"
#include "support.hpp"

using namespace morse_bridge;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("morse_bridge_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data_file(const std::string& name)
{
    return (fs::path(support::kDataDir) / name).string();
}

}  // namespace

TEST_CASE("CSV parsing")
{
    std::istringstream in("x,y\n0,0.5\n0.5,0.25\n1,0.75\n");
    const DataSet d = io::read_csv(in, 0.1);
    REQUIRE(d.points.size() == 3);
    CHECK(d.points[1].x == 0.5);
    CHECK(d.points[2].y == 0.75);
    CHECK(d.sigma2 == 0.1);
}

TEST_CASE("malformed CSV rows name their line")
{
    std::istringstream in("x,y\n0,0.5\n0.5;0.25\n1,0.75\n");
    try {
        io::read_csv(in, 0.1);
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::istringstream bad_y("x,y\n0,0.5\n1,1.5\n");
    CHECK_THROWS_AS(io::read_csv(bad_y, 0.1), InputError);
    std::istringstream unsorted("x,y\n0,0.5\n0,0.4\n");
    CHECK_THROWS_AS(io::read_csv(unsorted, 0.1), InputError);
}

TEST_CASE("JSON parsing and the sigma2 override")
{
    std::istringstream in(R"({"points": [[0, 0.5], [1, 0.25]], "sigma2": 0.3})");
    CHECK(io::read_json(in, std::nullopt).sigma2 == 0.3);
    std::istringstream again(R"({"points": [[0, 0.5], [1, 0.25]], "sigma2": 0.3})");
    CHECK(io::read_json(again, 0.7).sigma2 == 0.7);
    std::istringstream missing(R"({"points": [[0, 0.5], [1, 0.25]]})");
    CHECK_THROWS_AS(io::read_json(missing, std::nullopt), InputError);
    std::istringstream garbage("{");
    CHECK_THROWS_AS(io::read_json(garbage, 1.0), InputError);
}

TEST_CASE("data files of the examples agree across formats")
{
    const DataSet csv = io::read_dataset_file(data_file("example3.csv"), "csv", 0.0625);
    const DataSet js = io::read_dataset_file(data_file("example3.json"), "json", std::nullopt);
    const DataSet ref = support::example3();
    REQUIRE(csv.points.size() == ref.points.size());
    REQUIRE(js.points.size() == ref.points.size());
    for (std::size_t i = 0; i < ref.points.size(); ++i) {
        CHECK(csv.points[i].y == ref.points[i].y);
        CHECK(js.points[i].y == ref.points[i].y);
    }
    CHECK(js.sigma2 == 0.0625);
    CHECK_THROWS_AS(io::read_dataset_file(data_file("example3.csv"), "csv", std::nullopt), InputError);
    CHECK_THROWS_AS(io::read_dataset_file(data_file("nope.csv"), "csv", 1.0), InputError);
}

TEST_CASE("lattice files")
{
    const auto blocks = io::read_lattice_file(data_file("example3_lattice.json"));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<VertexInterval>{{2, 4}, {6, 8}});
    CHECK(blocks[1] == std::vector<VertexInterval>{{2, 8}});
    std::istringstream bad("[[[1, 2, 3]]]");
    CHECK_THROWS_AS(io::read_lattice(bad), InputError);
    std::istringstream not_list(R"({"a": 1})");
    CHECK_THROWS_AS(io::read_lattice(not_list), InputError);
}

TEST_CASE("interval rendering")
{
    CHECK(io::format_intervals(support::edges(10, {3, 4, 7, 8})) == "[2,4] ∪ [6,8]");
    CHECK(io::format_intervals(support::edges(10, {})) == "∅");
}

TEST_CASE("report round trip")
{
    AnalysisOptions o;
    o.source = LatticeSource::User;
    o.user_blocks = {{{2, 4}, {6, 8}}, {{2, 8}}};
    const AnalysisReport r = analyze(support::example3(), o);
    std::stringstream ss;
    io::write_report(r, ss);
    const json doc = json::parse(ss.str());
    CHECK(std::fabs(doc["total_probability"].get<double>() - r.probability.total) <= 1e-12);
    REQUIRE(doc["bands"].size() == 10);
    for (const auto& b : doc["bands"]) {
        const std::size_t n = b["edge"].get<std::size_t>();
        CHECK(std::fabs(b["probability"].get<double>() - r.probability.factor(n)) <= 1e-12);
    }
    CHECK(doc["lattice"]["provenance"] == "user");
    CHECK(doc["tiles"].size() == r.tiling.tiles.size());
    CHECK(doc["enclosure"].get<bool>());
}

TEST_CASE("DOT output is a DAG whose closure is the tile order")
{
    AnalysisOptions o;
    o.source = LatticeSource::User;
    o.user_blocks = {{{0, 4}}, {{6, 10}}, {{0, 4}, {6, 10}}};
    const AnalysisReport r = analyze(support::example2(), o);
    std::stringstream ss;
    io::write_dot(r, ss);
    const std::string dot = ss.str();

    std::map<std::string, std::size_t> id;
    for (std::size_t t = 0; t < r.tiling.tiles.size(); ++t)
        id[r.tiling.tiles[t].name] = t;
    const std::size_t n = id.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    const std::regex edge_re(R"re("([^"]+)" -> "([^"]+)")re");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge_re); it != std::sregex_iterator(); ++it)
        reach[id.at((*it)[1])][id.at((*it)[2])] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j])
                    reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i) {
        CHECK_FALSE(reach[i][i]);
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                CHECK(reach[i][j] == r.tiling.graph.less(j, i));
    }
}

TEST_CASE("window parsing")
{
    CHECK(cli::parse_window("2:8") == VertexInterval{2, 8});
    CHECK_THROWS_AS(cli::parse_window("8:2"), InputError);
    CHECK_THROWS_AS(cli::parse_window("x"), InputError);
}

TEST_CASE("analyze command writes its outputs")
{
    const fs::path dir = scratch("analyze");
    cli::RunConfig cfg;
    cfg.input = data_file("example2.csv");
    cfg.sigma2 = 0.0625;
    cfg.lattice_file = data_file("example2_lattice.json");
    cfg.out_dir = dir.string();
    std::ostringstream out, err;
    CHECK(cli::cmd_analyze(cfg, out, err) == cli::kSuccess);
    CHECK(out.str().find("probability 0.99") != std::string::npos);
    CHECK(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "morse_graph.dot"));
    const std::string bands = slurp(dir / "bands.csv");
    CHECK(bands.rfind("n,x_left,x_right,y_left,y_right,alpha,beta,probability\n", 0) == 0);
    CHECK(std::count(bands.begin(), bands.end(), '\n') == 11);

    cfg.emit = {"report"};
    cfg.out_dir = scratch("analyze_report_only").string();
    CHECK(cli::cmd_analyze(cfg, out, err) == cli::kSuccess);
    CHECK_FALSE(fs::exists(fs::path(cfg.out_dir) / "bands.csv"));
}

TEST_CASE("analyze command exit codes")
{
    std::ostringstream out, err;
    cli::RunConfig cfg;
    cfg.input = data_file("example3.csv");
    cfg.sigma2 = 0.0625;
    cfg.out_dir = scratch("exit_codes").string();

    cfg.window = VertexInterval{0, 3};
    CHECK(cli::cmd_analyze(cfg, out, err) == cli::kInputError);
    cfg.window.reset();

    const fs::path bad = fs::path(cfg.out_dir) / "bad_lattice.json";
    std::ofstream(bad) << "[[[0, 5]]]";
    cfg.lattice_file = bad.string();
    CHECK(cli::cmd_analyze(cfg, out, err) == cli::kLatticeError);
    CHECK_FALSE(err.str().empty());

    cfg.lattice_file.reset();
    cfg.input = data_file("missing.csv");
    CHECK(cli::cmd_analyze(cfg, out, err) == cli::kInputError);

    CHECK(cli::exit_code(NonConvergenceError("x")) == cli::kNonConvergence);
    CHECK(cli::exit_code(TauError("x")) == cli::kLatticeError);
    CHECK(cli::exit_code(std::runtime_error("x")) == cli::kFailure);
}

TEST_CASE("validate command is reproducible")
{
    cli::RunConfig cfg;
    cfg.input = data_file("example1.csv");
    cfg.sigma2 = 1.0;
    cfg.samples = 2000;
    cfg.grid = 64;
    cfg.seed = 17;
    std::ostringstream a, b, err;
    const int ra = cli::cmd_validate(cfg, a, err);
    const int rb = cli::cmd_validate(cfg, b, err);
    CHECK(ra == rb);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("all") != std::string::npos);

    cfg.samples = 1;
    std::ostringstream one;
    const int r1 = cli::cmd_validate(cfg, one, err);
    CHECK((r1 == cli::kSuccess || r1 == cli::kFailure));
    CHECK_FALSE(one.str().empty());
}

#include "morse_bridge/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "morse_bridge/errors.hpp"
#include "morse_bridge/invset.hpp"
#include "morse_bridge/io.hpp"
#include "morse_bridge/mc_oracle.hpp"

namespace morse_bridge::cli {

namespace {

constexpr double kMaxAbsZ = 4.0;

AnalysisOptions options_for(const RunConfig& cfg)
{
    AnalysisOptions opt;
    opt.window = cfg.window;
    opt.pi_tol = cfg.pi_tol;
    if (cfg.lattice_file) {
        opt.source = LatticeSource::User;
        opt.user_blocks = io::read_lattice_file(*cfg.lattice_file);
    } else if (cfg.auto_lattice) {
        opt.source = LatticeSource::Auto;
    }
    return opt;
}

void write_file(const std::filesystem::path& path, void (*writer)(const AnalysisReport&, std::ostream&),
                const AnalysisReport& report)
{
    std::ofstream f(path);
    if (!f)
        throw InputError("cannot write " + path.string());
    writer(report, f);
}

std::string line(const char* fmt, const std::string& n, double analytic, double estimate, double se, double z)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, n.c_str(), analytic, estimate, se, z);
    return buf;
}

}  // namespace

int exit_code(const std::exception& e)
{
    if (dynamic_cast<const NonConvergenceError*>(&e))
        return kNonConvergence;
    if (dynamic_cast<const LatticeValidationError*>(&e) || dynamic_cast<const TauError*>(&e) ||
        dynamic_cast<const CapExceededError*>(&e))
        return kLatticeError;
    if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const GridError*>(&e) || dynamic_cast<const EmptyImageError*>(&e))
        return kInputError;
    return kFailure;
}

VertexInterval parse_window(const std::string& text)
{
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos)
            throw std::invalid_argument(text);
        std::size_t used = 0;
        const std::string a = text.substr(0, colon);
        const std::string b = text.substr(colon + 1);
        const unsigned long i = std::stoul(a, &used);
        if (used != a.size())
            throw std::invalid_argument(text);
        const unsigned long j = std::stoul(b, &used);
        if (used != b.size())
            throw std::invalid_argument(text);
        if (i >= j)
            throw InputError("restriction window " + text + " is not ordered");
        return {i, j};
    } catch (const std::logic_error&) {
        throw InputError("restriction window must look like i:j, got " + text);
    }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        const DataSet data = io::read_dataset_file(cfg.input, cfg.format, cfg.sigma2);
        const AnalysisReport report = analyze(data, options_for(cfg));

        const std::filesystem::path dir(cfg.out_dir);
        std::filesystem::create_directories(dir);
        if (cfg.emit.contains("report"))
            write_file(dir / "report.json", io::write_report, report);
        if (cfg.emit.contains("dot"))
            write_file(dir / "morse_graph.dot", io::write_dot, report);
        if (cfg.emit.contains("bands"))
            write_file(dir / "bands.csv", io::write_bands, report);

        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", report.probability.total);
        out << "probability " << buf << '\n';
        for (std::size_t t = 0; t < report.tiling.tiles.size(); ++t) {
            const Tile& tile = report.tiling.tiles[t];
            out << "tile " << tile.name << ' ' << io::format_intervals(tile.edges) << " ranks "
                << report.indices[t].ranks[0] << ',' << report.indices[t].ranks[1];
            for (const auto tag : report.indices[t].tags)
                out << ' ' << to_string(tag);
            out << '\n';
        }
        for (const auto& w : report.warnings)
            err << "warning: " << w << '\n';
        return kSuccess;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e);
    }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        const DataSet data = io::read_dataset_file(cfg.input, cfg.format, cfg.sigma2);
        const AnalysisReport report = analyze(data, options_for(cfg));

        std::vector<std::pair<bridge::BridgeSegment, bridge::Band>> items;
        for (const auto& ea : report.probability.bands.edges)
            items.push_back({segment(data, ea.band.edge), {ea.band.alpha, ea.band.beta}});
        mc::McConfig mc_cfg;
        mc_cfg.samples = cfg.samples;
        mc_cfg.grid_per_segment = cfg.grid;
        mc_cfg.seed = cfg.seed;
        const mc::JointEstimate est = mc::estimate_joint(items, mc_cfg);

        bool ok = true;
        auto row = [&](const std::string& n, double analytic, const mc::McEstimate& e) {
            const double se_null = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(e.samples));
            const double se = std::max(e.standard_error, se_null);
            const double diff = e.estimate - analytic;
            const double z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff));
            if (!(std::fabs(z) <= kMaxAbsZ))
                ok = false;
            out << line("%5s %12.6f %12.6f %12.6f %9.3f\n", n, analytic, e.estimate, e.standard_error, z);
        };
        char head[128];
        std::snprintf(head, sizeof head, "%5s %12s %12s %12s %9s\n", "n", "analytic", "estimate", "std_error", "z");
        out << head;
        for (std::size_t i = 0; i < items.size(); ++i)
            row(std::to_string(report.probability.factors[i].edge), report.probability.factors[i].probability,
                est.segments[i]);
        row("all", report.probability.total, est.joint);
        if (!ok)
            err << "error: some |z| exceeds " << kMaxAbsZ << '\n';
        return ok ? kSuccess : kFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e);
    }
}

}  // namespace morse_bridge::cli

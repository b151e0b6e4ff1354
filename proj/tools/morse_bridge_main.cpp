#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morse_bridge/cli.hpp"
#include "morse_bridge/errors.hpp"

using namespace morse_bridge;

int main(int argc, char** argv)
{
    CLI::App app{"Morse tilings, Conley indices and validity probabilities for Brownian bridge data"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    double sigma2 = 0.0;
    std::string lattice;
    std::string window;
    std::string emit;

    auto* analyze = app.add_subcommand("analyze", "Build the Morse tiling and its probability");
    analyze->add_option("--input", cfg.input, "Data file")->required();
    analyze->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"csv", "json"}));
    analyze->add_option("--sigma2", sigma2, "Variance parameter");
    auto* lattice_opt = analyze->add_option("--lattice", lattice, "Lattice file (JSON)");
    auto* auto_flag = analyze->add_flag("--auto", cfg.auto_lattice, "Enumerate all forward-invariant sets");
    lattice_opt->excludes(auto_flag);
    analyze->add_option("--restrict", window, "Restriction window i:j (vertex indices)");
    analyze->add_option("--out", cfg.out_dir, "Output directory")->required();
    analyze->add_option("--emit", emit, "Comma separated subset of report,dot,bands");
    analyze->add_option("--pi-tol", cfg.pi_tol, "Series tolerance")->check(CLI::PositiveNumber);

    auto* validate = app.add_subcommand("validate", "Compare band probabilities with Monte Carlo");
    validate->add_option("--input", cfg.input, "Data file")->required();
    validate->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"csv", "json"}));
    validate->add_option("--sigma2", sigma2, "Variance parameter");
    validate->add_option("--lattice", lattice, "Lattice file (JSON)");
    validate->add_option("--restrict", window, "Restriction window i:j (vertex indices)");
    validate->add_option("--samples", cfg.samples, "Sample paths")->check(CLI::PositiveNumber);
    validate->add_option("--grid", cfg.grid, "Grid points per segment (power of two)");
    validate->add_option("--seed", cfg.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kInputError;
    }

    for (auto* sub : {analyze, validate}) {
        if (sub->count("--sigma2"))
            cfg.sigma2 = sigma2;
        if (sub->count("--lattice"))
            cfg.lattice_file = lattice;
        if (!sub->count("--format") && cfg.input.size() >= 5 &&
            cfg.input.compare(cfg.input.size() - 5, 5, ".json") == 0)
            cfg.format = "json";
    }
    try {
        if (!window.empty())
            cfg.window = cli::parse_window(window);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kInputError;
    }
    if (!emit.empty()) {
        cfg.emit.clear();
        std::stringstream ss(emit);
        for (std::string item; std::getline(ss, item, ',');) {
            if (item != "report" && item != "dot" && item != "bands") {
                std::cerr << "error: unknown --emit item " << item << '\n';
                return cli::kInputError;
            }
            cfg.emit.insert(item);
        }
    }

    if (analyze->parsed())
        return cli::cmd_analyze(cfg, std::cout, std::cerr);
    return cli::cmd_validate(cfg, std::cout, std::cerr);
}

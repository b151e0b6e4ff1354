#pragma once

// The analyze and validate commands, independent of argument parsing.

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "morse_bridge/complex.hpp"
#include "morse_bridge/probability.hpp"

namespace morse_bridge::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kInputError = 2,
    kLatticeError = 3,
    kNonConvergence = 4,
};

struct RunConfig {
    std::string input;
    std::string format = "csv";
    std::optional<double> sigma2;
    bool auto_lattice = false;
    std::optional<std::string> lattice_file;
    std::optional<VertexInterval> window;
    std::string out_dir = ".";
    std::set<std::string> emit{"report", "dot", "bands"};
    std::uint64_t samples = 100'000;
    std::size_t grid = 1024;
    std::uint64_t seed = 0;
    double pi_tol = bridge::kDefaultPiTolerance;
};

/// Exit code for an exception escaping a command.
int exit_code(const std::exception& e);

/// Parses "i:j" into a vertex window. Throws InputError.
VertexInterval parse_window(const std::string& text);

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Prints n, analytic, estimate, standard error and z for every edge and
/// for the joint event. Fails when some |z| exceeds 4.
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace morse_bridge::cli

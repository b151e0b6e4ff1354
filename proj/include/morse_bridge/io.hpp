#pragma once

// Data ingestion and report emission.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morse_bridge/complex.hpp"
#include "morse_bridge/probability.hpp"

namespace morse_bridge::io {

/// Header `x,y`, one point per row. Malformed rows raise InputError naming
/// the 1-based line number.
DataSet read_csv(std::istream& in, double sigma2);

/// {"points": [[x, y], ...], "sigma2": v}. A given `sigma2` overrides the
/// file's value; one of the two must be present.
DataSet read_json(std::istream& in, std::optional<double> sigma2);

DataSet read_dataset_file(const std::string& path, const std::string& format,
                          std::optional<double> sigma2);

/// JSON list of blocks, each a list of [i, j] vertex intervals.
std::vector<std::vector<VertexInterval>> read_lattice(std::istream& in);
std::vector<std::vector<VertexInterval>> read_lattice_file(const std::string& path);

/// "[2,4] ∪ [6,8]" style rendering; "∅" for the empty set.
std::string format_intervals(const EdgeSet& s);

void write_report(const AnalysisReport& report, std::ostream& out);
void write_dot(const AnalysisReport& report, std::ostream& out);
void write_bands(const AnalysisReport& report, std::ostream& out);

}  // namespace morse_bridge::io

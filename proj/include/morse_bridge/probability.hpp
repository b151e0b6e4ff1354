#pragma once

// Probability that a block, a lattice of blocks or a Morse tiling with its
// Conley indices is valid for a random sample path, and the end-to-end
// analysis pipeline.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morse_bridge/bridge_prob.hpp"
#include "morse_bridge/comb_map.hpp"
#include "morse_bridge/complex.hpp"
#include "morse_bridge/conley.hpp"
#include "morse_bridge/invset.hpp"
#include "morse_bridge/tiling.hpp"

namespace morse_bridge {

/// The bridge over grid edge n (points n-1 and n).
bridge::BridgeSegment segment(const DataSet& data, std::size_t edge);

/// Product over the edges of K of the probability of staying inside
/// (α_K(n), β_K(n)). K must be forward invariant under `map`.
double block_probability(const EdgeSet& block, const CombMap& map, const DataSet& data,
                         double tol = bridge::kDefaultPiTolerance);

struct EdgeFactor {
    std::size_t edge = 0;
    double probability = 0.0;
};

struct LatticeProbability {
    double total = 0.0;
    std::vector<EdgeFactor> factors;  ///< edge order
    BandAssignment bands;

    double factor(std::size_t edge) const;
};

LatticeProbability lattice_probability(const BlockBasis& basis, const CombMap& map,
                                       const DataSet& data, double tol = bridge::kDefaultPiTolerance);
LatticeProbability lattice_probability(const BlockLattice& lattice, const CombMap& map,
                                       const DataSet& data, double tol = bridge::kDefaultPiTolerance);

/// Product, in the order of `extension` (indices into lattice.members()), of
/// the factors of the edges each member adds to the members before it.
double telescoped_probability(const BlockLattice& lattice, const LatticeProbability& lp,
                              const std::vector<std::size_t>& extension);

enum class LatticeSource { Top, Auto, User };

struct AnalysisOptions {
    LatticeSource source = LatticeSource::Top;
    /// Blocks for LatticeSource::User, each a list of closed vertex intervals.
    /// ∅ and the full edge set are implicit.
    std::vector<std::vector<VertexInterval>> user_blocks;
    std::optional<VertexInterval> window;
    double pi_tol = bridge::kDefaultPiTolerance;
    std::size_t cap = kDefaultInvsetCap;
};

struct TileIndex {
    std::array<std::size_t, 2> ranks{};
    ConleyIndex index;
    std::array<ShiftInvariants, 2> invariants;
    std::vector<IndexTag> tags;
};

struct AnalysisReport {
    DataSet data;
    std::optional<VertexInterval> window;
    Complex complex;
    CombMap f_mu;
    CombMap f_K;
    LatticeProvenance provenance = LatticeProvenance::Top;
    std::vector<EdgeSet> lattice;          ///< empty when only generators are known
    std::vector<std::string> lattice_names;
    BlockBasis basis;
    LatticeProbability probability;
    MorseTiling tiling;
    std::vector<TileIndex> indices;        ///< parallel to tiling.tiles
    bool encloses = true;                  ///< F_K encloses F_μ
    Warnings warnings;
};

/// Runs the whole pipeline. Errors are rethrown with the failing stage set.
AnalysisReport analyze(const DataSet& data, const AnalysisOptions& options = {});

}  // namespace morse_bridge

#pragma once

// Morse tiles, the Morse graph and the per-edge band assignment.

#include <cstddef>
#include <string>
#include <vector>

#include "morse_bridge/comb_map.hpp"
#include "morse_bridge/complex.hpp"
#include "morse_bridge/invset.hpp"
#include "morse_bridge/order.hpp"

namespace morse_bridge {

/// One connected component J_m = [x_first, x_last] of a block with its
/// index set I_m = {first+1, ..., last}.
struct BlockComponent {
    VertexInterval interval;
    std::vector<std::size_t> edges;
};

std::vector<BlockComponent> index_sets(const EdgeSet& block, const Complex& complex);

/// For each component m of the block, the component τ(m) that contains the
/// images of all of m's edges. Throws TauError if there is no such unique
/// component.
std::vector<std::size_t> tau_map(const EdgeSet& block, const CombMap& map);

/// The target band (α_K(n), β_K(n)) of one edge of a block.
struct EdgeBand {
    std::size_t edge = 0;
    VertexInterval band;  ///< grid vertices of α and β
    double alpha = 0.0;
    double beta = 0.0;
};

/// α_K and β_K on I(K).
std::vector<EdgeBand> block_bands(const EdgeSet& block, const CombMap& map);

struct EdgeAssignment {
    EdgeBand band;
    std::string gamma;   ///< name of γ(n)
    EdgeSet gamma_set;
};

/// γ, α and β for every edge of the complex, in edge order.
struct BandAssignment {
    std::vector<EdgeAssignment> edges;

    /// Bands indexed by grid edge, as expected by build_F_K.
    std::vector<VertexInterval> grid_bands(std::size_t grid_edges) const;
    const EdgeAssignment& at_edge(std::size_t n) const;
};

/// γ(n) is the intersection of the join-irreducibles containing edge n,
/// which is the least lattice member containing it.
BandAssignment band_assignment(const BlockBasis& basis, const CombMap& map);
BandAssignment band_assignment(const BlockLattice& lattice, const CombMap& map);

/// F_K^top: edge n maps to the edges of [α(n), β(n)].
CombMap outer_map(const BandAssignment& bands, const Complex& complex);

struct Tile {
    std::string name;        ///< name of the defining join-irreducible K
    EdgeSet block;           ///< K
    EdgeSet predecessor;     ///< ←K
    std::string predecessor_name;
    EdgeSet edges;           ///< K \ ←K
};

struct MorseTiling {
    std::vector<Tile> tiles;
    order::Poset graph;      ///< inclusion order on the defining blocks
};

MorseTiling morse_tiling(const BlockBasis& basis);
MorseTiling morse_tiling(const BlockLattice& lattice);

}  // namespace morse_bridge

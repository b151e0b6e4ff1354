#pragma once

// Conley indices of index pairs (↓K, ↓K0) in the grid complex.
//
// The chain selector sends each vertex v to a vertex σ(v) of its admissible
// image and each edge [v, w] to the unique edge path from σ(v) to σ(w). A
// vertex of ↓K0 uses only the images of its adjacent edges in K0, every
// other vertex of ↓K those of its adjacent edges in K, so that the selector
// is a map of pairs.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "morse_bridge/comb_map.hpp"
#include "morse_bridge/complex.hpp"
#include "morse_bridge/smith.hpp"

namespace morse_bridge {

struct IndexPair {
    EdgeSet upper;  ///< K
    EdgeSet lower;  ///< K0 ⊆ K
};

/// Relative cells of (↓K, ↓K0) and the boundary matrix from edges to
/// vertices (rows = vertices, columns = edges, both ascending).
struct ChainComplex1D {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    IntMatrix boundary;
};

ChainComplex1D relative_chain_complex(const IndexPair& pair, const Complex& complex);

/// Free bases of H_0 and H_1 of the pair together with the coordinate maps
/// that send a relative chain (resp. cycle) to its class.
struct RelativeHomology {
    ChainComplex1D chains;
    std::array<IntMatrix, 2> basis;       ///< columns are representatives
    std::array<IntMatrix, 2> coordinates; ///< chain -> class coordinates
    std::size_t rank(int dim) const { return static_cast<std::size_t>(basis[dim].cols()); }
};

/// Throws TorsionError if the relative homology has torsion.
RelativeHomology relative_homology(const IndexPair& pair, const Complex& complex);

/// Picks σ(v) among the admissible candidate vertices (ascending).
using VertexSelector =
    std::function<std::size_t(std::size_t vertex, const std::vector<std::size_t>& candidates)>;

/// σ(v) = leftmost admissible vertex.
std::size_t leftmost_selector(std::size_t vertex, const std::vector<std::size_t>& candidates);

/// Admissible vertices per grid vertex of ↓K (empty elsewhere). Throws
/// InvarianceError when the pair is not forward invariant and
/// NonIntervalError when a needed image is not an interval.
std::vector<std::vector<std::size_t>> admissible_vertices(const IndexPair& pair, const FullMap& map);

/// Chain maps on the absolute chains of ↓K (rows/columns follow the
/// ascending vertex and edge lists of ↓K).
struct ChainSelector {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    IntMatrix boundary;       ///< ∂ on ↓K
    IntMatrix vertex_map;     ///< f0
    IntMatrix edge_map;       ///< f1
};

ChainSelector chain_selector(const IndexPair& pair, const FullMap& map,
                             const VertexSelector& select = leftmost_selector);

/// Integer matrices of F_* on H_0 and H_1 of the pair, in the bases of
/// `relative_homology`.
struct ConleyIndex {
    std::array<IntMatrix, 2> maps;
};

ConleyIndex induced_map(const IndexPair& pair, const FullMap& map,
                        const VertexSelector& select = leftmost_selector);

/// Shift-equivalence invariants of one matrix: the characteristic
/// polynomial with all factors of x removed (monic, highest degree first)
/// and the traces of A^1 .. A^d, d its degree. Equal records are necessary
/// for shift equivalence; different records rule it out.
struct ShiftInvariants {
    std::vector<std::int64_t> charpoly;
    std::vector<std::int64_t> traces;
    std::size_t eventual_rank = 0;

    bool trivial() const noexcept { return eventual_rank == 0; }
    bool operator==(const ShiftInvariants&) const = default;
};

ShiftInvariants shift_invariants(const IntMatrix& A);
std::array<ShiftInvariants, 2> shift_invariants(const ConleyIndex& index);

enum class IndexTag { FixedPoint, UnstableFixedPoint, PeriodTwoOrbit };

std::string to_string(IndexTag tag);

/// Looks for the three recognised patterns: Con_0 ≃ id (fixed point),
/// Con_1 ≃ ±id (unstable fixed point), Con_0 ≃ the 2x2 swap (period-two
/// orbit); the other dimension must be trivial. Never claims anything else.
std::vector<IndexTag> interpret_index(const ConleyIndex& index);

}  // namespace morse_bridge

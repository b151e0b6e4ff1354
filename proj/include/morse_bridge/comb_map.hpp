#pragma once

// Combinatorial multivalued maps on the edges of the grid complex.

#include <utility>
#include <vector>

#include "morse_bridge/complex.hpp"
#include "morse_bridge/errors.hpp"

namespace morse_bridge {

/// F^top: every edge of the complex maps to a non-empty set of edges.
class CombMap {
public:
    /// `images` is indexed by grid edge number (size N+1); entries for edges
    /// outside the complex must be empty.
    CombMap(Complex complex, std::vector<EdgeSet> images);

    const Complex& complex() const noexcept { return complex_; }
    const EdgeSet& image(std::size_t edge) const { return images_.at(edge); }
    const std::vector<EdgeSet>& images() const noexcept { return images_; }

    /// Union of the images of the edges in `s`.
    EdgeSet apply(const EdgeSet& s) const;

    /// True iff every image is a run of consecutive edges.
    bool interval_valued() const noexcept { return interval_valued_; }

    bool operator==(const CombMap& other) const
    {
        return complex_ == other.complex_ && images_ == other.images_;
    }

private:
    Complex complex_;
    std::vector<EdgeSet> images_;
    bool interval_valued_ = true;
};

/// Extension of a map to every cell: edges keep their image, a vertex maps
/// to the closure of the images of its adjacent edges in the complex.
struct FullMap {
    CombMap top;
    std::vector<CellSet> vertex_images;  ///< indexed by grid vertex

    const Complex& complex() const noexcept { return top.complex(); }
};

/// The minimal map of the piecewise-linear mean: edge n maps to every edge
/// whose closed interval meets [min(y_{n-1}, y_n), max(y_{n-1}, y_n)].
/// Appends a warning for every y that equals a grid coordinate exactly.
CombMap build_F_mu(const DataSet& data, const Complex& complex, Warnings* warnings = nullptr);

/// Edge n maps to every edge of the complex inside bands[n]. `bands` is
/// indexed by grid edge; entries for edges outside the complex are ignored.
CombMap build_F_K(const Complex& complex, const std::vector<VertexInterval>& bands);

/// Same, with the band ends given as coordinates. Throws GridError if some
/// value is not exactly a grid coordinate.
CombMap build_F_K(const Complex& complex, const std::vector<std::pair<double, double>>& bands);

/// True iff inner(ξ) ⊆ outer(ξ) for every edge. Throws ComplexMismatchError
/// when the maps live on different complexes.
bool is_enclosure(const CombMap& inner, const CombMap& outer);

FullMap extend_full(const CombMap& map);

/// Images intersected with `keep`, on the restricted complex. Throws
/// EmptyImageError if some kept edge loses its whole image.
CombMap restrict_map(const CombMap& map, const EdgeSet& keep);

}  // namespace morse_bridge

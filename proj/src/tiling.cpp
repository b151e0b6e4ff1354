#include "morse_bridge/tiling.hpp"

#include <algorithm>

namespace morse_bridge {

std::vector<BlockComponent> index_sets(const EdgeSet& block, const Complex& complex)
{
    complex.require_subset(block, "block");
    std::vector<BlockComponent> out;
    for (const auto& iv : geometric_realization(block)) {
        BlockComponent comp{iv, {}};
        for (std::size_t n = iv.first + 1; n <= iv.last; ++n)
            comp.edges.push_back(n);
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::size_t> tau_map(const EdgeSet& block, const CombMap& map)
{
    const auto comps = index_sets(block, map.complex());
    auto component_of = [&](std::size_t edge) -> std::size_t {
        for (std::size_t m = 0; m < comps.size(); ++m)
            if (comps[m].interval.first < edge && edge <= comps[m].interval.last)
                return m;
        throw TauError("edge " + std::to_string(edge) + " of an image leaves block " + to_string(block));
    };

    std::vector<std::size_t> tau(comps.size());
    for (std::size_t m = 0; m < comps.size(); ++m) {
        EdgeSet img = map.complex().empty_edges();
        for (std::size_t n : comps[m].edges)
            img |= map.image(n);
        const std::size_t target = component_of(img.first());
        for (auto k = img.first(); k != EdgeSet::npos; k = img.next(k))
            if (component_of(k) != target)
                throw TauError("images of component " + std::to_string(m + 1) + " of block " +
                               to_string(block) + " straddle two components");
        tau[m] = target;
    }
    return tau;
}

std::vector<EdgeBand> block_bands(const EdgeSet& block, const CombMap& map)
{
    const Complex& c = map.complex();
    const auto comps = index_sets(block, c);
    const auto tau = tau_map(block, map);
    std::vector<EdgeBand> out;
    for (std::size_t m = 0; m < comps.size(); ++m) {
        const VertexInterval target = comps[tau[m]].interval;
        for (std::size_t n : comps[m].edges)
            out.push_back({n, target, c.x(target.first), c.x(target.last)});
    }
    return out;
}

std::vector<VertexInterval> BandAssignment::grid_bands(std::size_t grid_edges) const
{
    std::vector<VertexInterval> out(grid_edges + 1);
    for (const auto& e : edges)
        out[e.band.edge] = e.band.band;
    return out;
}

const EdgeAssignment& BandAssignment::at_edge(std::size_t n) const
{
    for (const auto& e : edges)
        if (e.band.edge == n)
            return e;
    throw InputError("edge " + std::to_string(n) + " has no band assignment");
}

BandAssignment band_assignment(const BlockBasis& basis, const CombMap& map)
{
    const Complex& c = map.complex();
    if (!(basis.top == c.edges()))
        throw LatticeValidationError("lattice top does not match the complex");

    BandAssignment out;
    const EdgeSet& edges = c.edges();
    for (auto n = edges.first(); n != EdgeSet::npos; n = edges.next(n)) {
        EdgeSet gamma = basis.top;
        bool any = false;
        for (const auto& b : basis.irreducibles)
            if (b.set.contains(n)) {
                gamma &= b.set;
                any = true;
            }
        const auto it = std::find_if(basis.irreducibles.begin(), basis.irreducibles.end(),
                                     [&](const Block& b) { return b.set == gamma; });
        if (!any || it == basis.irreducibles.end())
            throw StructureError("no least block contains edge " + std::to_string(n));

        const auto bands = block_bands(gamma, map);
        const auto band = std::find_if(bands.begin(), bands.end(),
                                       [&](const EdgeBand& eb) { return eb.edge == n; });
        out.edges.push_back({*band, it->name, gamma});
    }
    return out;
}

BandAssignment band_assignment(const BlockLattice& lattice, const CombMap& map)
{
    return band_assignment(lattice.basis(), map);
}

CombMap outer_map(const BandAssignment& bands, const Complex& complex)
{
    return build_F_K(complex, bands.grid_bands(complex.grid_edge_count()));
}

MorseTiling morse_tiling(const BlockBasis& basis)
{
    std::vector<Tile> tiles;
    std::vector<std::string> labels;
    for (const auto& b : basis.irreducibles) {
        tiles.push_back({b.name, b.set, b.predecessor, b.predecessor_name, b.set - b.predecessor});
        labels.push_back(b.name);
    }
    const std::size_t k = tiles.size();
    std::vector<bool> rel(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            rel[i * k + j] = tiles[i].block.is_subset_of(tiles[j].block);
    return MorseTiling{std::move(tiles), order::Poset(std::move(labels), std::move(rel))};
}

MorseTiling morse_tiling(const BlockLattice& lattice)
{
    return morse_tiling(lattice.basis());
}

}  // namespace morse_bridge

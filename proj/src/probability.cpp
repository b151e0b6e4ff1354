#include "morse_bridge/probability.hpp"

#include <algorithm>
#include <utility>

#include "morse_bridge/errors.hpp"

namespace morse_bridge {

namespace {

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (Error& e) {
        if (e.stage().empty())
            e.set_stage(stage);
        throw;
    }
}

}  // namespace

bridge::BridgeSegment segment(const DataSet& data, std::size_t edge)
{
    if (edge == 0 || edge >= data.points.size())
        throw InputError("edge " + std::to_string(edge) + " is not an edge of the data");
    const Point& l = data.points[edge - 1];
    const Point& r = data.points[edge];
    return {l.x, r.x, l.y, r.y, data.sigma2};
}

double block_probability(const EdgeSet& block, const CombMap& map, const DataSet& data, double tol)
{
    double p = 1.0;
    for (const EdgeBand& eb : block_bands(block, map))
        p *= bridge::band_probability(segment(data, eb.edge), {eb.alpha, eb.beta}, tol);
    return p;
}

double LatticeProbability::factor(std::size_t edge) const
{
    for (const auto& f : factors)
        if (f.edge == edge)
            return f.probability;
    throw InputError("edge " + std::to_string(edge) + " has no factor");
}

LatticeProbability lattice_probability(const BlockBasis& basis, const CombMap& map,
                                       const DataSet& data, double tol)
{
    LatticeProbability lp;
    lp.bands = band_assignment(basis, map);
    lp.total = 1.0;
    for (const auto& ea : lp.bands.edges) {
        const double p = bridge::band_probability(segment(data, ea.band.edge),
                                                  {ea.band.alpha, ea.band.beta}, tol);
        lp.factors.push_back({ea.band.edge, p});
        lp.total *= p;
    }
    return lp;
}

LatticeProbability lattice_probability(const BlockLattice& lattice, const CombMap& map,
                                       const DataSet& data, double tol)
{
    return lattice_probability(lattice.basis(), map, data, tol);
}

double telescoped_probability(const BlockLattice& lattice, const LatticeProbability& lp,
                              const std::vector<std::size_t>& extension)
{
    EdgeSet seen = lattice.member(0) - lattice.member(0);
    double total = 1.0;
    for (std::size_t q : extension) {
        const EdgeSet fresh = lattice.member(q) - seen;
        double step = 1.0;
        for (auto n = fresh.first(); n != EdgeSet::npos; n = fresh.next(n))
            step *= lp.factor(n);
        total *= step;
        seen = seen | lattice.member(q);
    }
    return total;
}

AnalysisReport analyze(const DataSet& data, const AnalysisOptions& options)
{
    Warnings warnings;

    staged("input", [&] { validate_dataset(data); });
    const Complex full = build_complex(data);

    const auto restricted_pair = staged("restrict", [&] {
        CombMap mu = build_F_mu(data, full, &warnings);
        if (!options.window)
            return std::pair<Complex, CombMap>{full, std::move(mu)};
        const VertexInterval w = *options.window;
        if (w.first >= w.last || w.last > full.grid_edge_count())
            throw InputError("restriction window " + std::to_string(w.first) + ":" +
                             std::to_string(w.last) + " is not an ordered pair of grid vertices");
        const EdgeSet keep = edges_of({w}, full.grid_edge_count());
        CombMap restricted = restrict_map(mu, keep);
        return std::pair<Complex, CombMap>{restricted.complex(), std::move(restricted)};
    });
    const Complex& complex = restricted_pair.first;
    const CombMap& f_mu = restricted_pair.second;

    LatticeProvenance provenance = LatticeProvenance::Top;
    std::vector<EdgeSet> members;
    std::vector<std::string> names;
    const BlockBasis basis = staged("lattice", [&] {
        std::optional<BlockLattice> lattice;
        switch (options.source) {
        case LatticeSource::Top:
            lattice.emplace(complex, std::vector<EdgeSet>{complex.empty_edges(), complex.edges()},
                            LatticeProvenance::Top);
            break;
        case LatticeSource::Auto:
            try {
                lattice.emplace(enumerate_invset(f_mu, options.cap));
            } catch (const CapExceededError& e) {
                warnings.push_back(std::string(e.message()) +
                                   "; continuing with the join-irreducible generators only");
                provenance = LatticeProvenance::Generated;
                return e.generators();
            }
            break;
        case LatticeSource::User: {
            std::vector<EdgeSet> sets{complex.empty_edges(), complex.edges()};
            for (const auto& block : options.user_blocks) {
                if (block.empty())
                    throw LatticeValidationError("lattice block without intervals");
                for (const auto& iv : block)
                    if (iv.first >= iv.last || iv.last > complex.grid_edge_count())
                        throw LatticeValidationError("interval " + std::to_string(iv.first) + ":" +
                                                     std::to_string(iv.last) +
                                                     " is not an ordered pair of grid vertices");
                sets.push_back(edges_of(block, complex.grid_edge_count()));
            }
            lattice.emplace(validate_sublattice(std::move(sets), f_mu, &warnings));
            break;
        }
        }
        provenance = lattice->provenance();
        members = lattice->members();
        for (std::size_t i = 0; i < lattice->size(); ++i)
            names.push_back(lattice->name(i));
        return lattice->basis();
    });

    LatticeProbability probability = staged("probability", [&] {
        return lattice_probability(basis, f_mu, data, options.pi_tol);
    });

    const CombMap f_K = staged("outer-approximation", [&] {
        CombMap fk = outer_map(probability.bands, complex);
        for (const auto& s : members)
            if (!member_of_invset(s, fk))
                throw InvarianceError("lattice member " + to_string(s) +
                                      " is not forward invariant under the outer map");
        for (const auto& b : basis.irreducibles)
            if (!member_of_invset(b.set, fk))
                throw InvarianceError("block " + b.name + " is not forward invariant under the outer map");
        return fk;
    });
    const bool encloses = is_enclosure(f_mu, f_K);
    if (!encloses)
        warnings.push_back("the outer map does not enclose F_mu; a data value lies on a band boundary");

    MorseTiling tiling = staged("tiling", [&] { return morse_tiling(basis); });

    std::vector<TileIndex> indices = staged("conley", [&] {
        const FullMap fk_full = extend_full(f_K);
        std::vector<TileIndex> out;
        for (const Tile& t : tiling.tiles) {
            const IndexPair pair{t.block, t.predecessor};
            const RelativeHomology h = relative_homology(pair, complex);
            TileIndex ti;
            ti.ranks = {h.rank(0), h.rank(1)};
            ti.index = induced_map(pair, fk_full);
            ti.invariants = shift_invariants(ti.index);
            ti.tags = interpret_index(ti.index);
            out.push_back(std::move(ti));
        }
        return out;
    });

    return AnalysisReport{data,
                          options.window,
                          complex,
                          f_mu,
                          f_K,
                          provenance,
                          std::move(members),
                          std::move(names),
                          basis,
                          std::move(probability),
                          std::move(tiling),
                          std::move(indices),
                          encloses,
                          std::move(warnings)};
}

}  // namespace morse_bridge

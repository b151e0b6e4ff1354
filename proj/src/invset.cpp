#include "morse_bridge/invset.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

namespace morse_bridge {

std::string to_string(LatticeProvenance p)
{
    switch (p) {
    case LatticeProvenance::Top: return "top";
    case LatticeProvenance::Enumerated: return "enumerated";
    case LatticeProvenance::UserSupplied: return "user";
    case LatticeProvenance::Generated: return "generators";
    }
    return "unknown";
}

BlockLattice::BlockLattice(const Complex& complex, std::vector<EdgeSet> members,
                           LatticeProvenance provenance)
    : members_(std::move(members)), provenance_(provenance)
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || !members_.front().empty() || !(members_.back() == complex.edges()))
        throw LatticeValidationError("a block lattice must contain ∅ and the full edge set");
    for (const auto& m : members_)
        complex.require_subset(m, "lattice member");

    std::unordered_map<EdgeSet, std::size_t, IndexSetHash> index;
    for (std::size_t i = 0; i < members_.size(); ++i)
        index.emplace(members_[i], i);
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j) {
            if (!index.contains(members_[i] & members_[j]) || !index.contains(members_[i] | members_[j]))
                throw NotClosedError("family is not closed under ∩/∪ for " + to_string(members_[i]) +
                                     " and " + to_string(members_[j]));
        }

    names_.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i)
        names_.push_back("K" + std::to_string(i));
}

std::optional<std::size_t> BlockLattice::find(const EdgeSet& s) const
{
    const auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it != members_.end() && *it == s)
        return static_cast<std::size_t>(it - members_.begin());
    return std::nullopt;
}

order::FiniteLattice BlockLattice::to_finite_lattice() const
{
    const std::size_t n = members_.size();
    std::vector<order::ElementId> meet(n * n), join(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            meet[i * n + j] = *find(members_[i] & members_[j]);
            join[i * n + j] = *find(members_[i] | members_[j]);
        }
    return order::FiniteLattice(names_, std::move(meet), std::move(join), bottom(), top());
}

BlockBasis BlockLattice::basis() const
{
    BlockBasis basis{top_set(), {}, provenance_};
    for (std::size_t k = 1; k < members_.size(); ++k) {
        EdgeSet below(members_[k].capacity());
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (j != k && members_[j].is_subset_of(members_[k]))
                below |= members_[j];
        if (below == members_[k])
            continue;
        const auto pred = find(below);
        if (!pred)
            throw StructureError("predecessor of " + names_[k] + " is not a member");
        basis.irreducibles.push_back({names_[k], members_[k], below, names_[*pred]});
    }
    return basis;
}

bool member_of_invset(const EdgeSet& s, const CombMap& map)
{
    for (auto n = s.first(); n != EdgeSet::npos; n = s.next(n)) {
        if (!map.complex().has_edge(n))
            return false;
        if (!map.image(n).is_subset_of(s))
            return false;
    }
    return true;
}

namespace {

/// Strongly connected components of the edge graph, ordered so that every
/// component comes after all components it reaches.
struct Condensation {
    std::vector<EdgeSet> components;
    std::vector<std::vector<std::size_t>> successors;
};

Condensation condense(const CombMap& map)
{
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
    const Complex& c = map.complex();
    const auto edges = c.edges().members();
    std::vector<std::size_t> slot(c.grid_edge_count() + 1, 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        slot[edges[i]] = i;

    Graph g(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeSet& img = map.image(edges[i]);
        for (auto k = img.first(); k != EdgeSet::npos; k = img.next(k))
            boost::add_edge(i, slot[k], g);
    }
    std::vector<int> comp_of(edges.size());
    const auto count = static_cast<std::size_t>(boost::strong_components(
        g, boost::make_iterator_property_map(comp_of.begin(), boost::get(boost::vertex_index, g))));

    std::vector<EdgeSet> comps(count, c.empty_edges());
    std::vector<std::vector<std::size_t>> succ(count);
    for (std::size_t i = 0; i < edges.size(); ++i)
        comps[comp_of[i]].insert(edges[i]);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeSet& img = map.image(edges[i]);
        for (auto k = img.first(); k != EdgeSet::npos; k = img.next(k)) {
            const auto a = static_cast<std::size_t>(comp_of[i]);
            const auto b = static_cast<std::size_t>(comp_of[slot[k]]);
            if (a != b && std::find(succ[a].begin(), succ[a].end(), b) == succ[a].end())
                succ[a].push_back(b);
        }
    }

    // Sinks first.
    std::vector<std::size_t> remaining(count);
    std::vector<std::vector<std::size_t>> preds(count);
    for (std::size_t a = 0; a < count; ++a) {
        remaining[a] = succ[a].size();
        for (std::size_t b : succ[a])
            preds[b].push_back(a);
    }
    std::vector<std::size_t> order;
    for (std::size_t a = 0; a < count; ++a)
        if (remaining[a] == 0)
            order.push_back(a);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t p : preds[order[i]])
            if (--remaining[p] == 0)
                order.push_back(p);

    std::vector<std::size_t> rank(count);
    for (std::size_t i = 0; i < count; ++i)
        rank[order[i]] = i;
    Condensation out;
    out.components.reserve(count);
    out.successors.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.components.push_back(comps[order[i]]);
        for (std::size_t b : succ[order[i]])
            out.successors[i].push_back(rank[b]);
    }
    return out;
}

}  // namespace

BlockBasis generator_basis(const CombMap& map)
{
    const Condensation cond = condense(map);
    const std::size_t count = cond.components.size();
    std::vector<EdgeSet> reach(count);
    for (std::size_t i = 0; i < count; ++i) {
        reach[i] = cond.components[i];
        for (std::size_t j : cond.successors[i])
            reach[i] |= reach[j];  // j < i, already complete
    }
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return reach[a] < reach[b]; });

    BlockBasis basis{map.complex().edges(), {}, LatticeProvenance::Generated};
    for (std::size_t r = 0; r < count; ++r) {
        const std::size_t i = idx[r];
        basis.irreducibles.push_back(
            {"J" + std::to_string(r + 1), reach[i], reach[i] - cond.components[i], ""});
    }
    return basis;
}

BlockLattice enumerate_invset(const CombMap& map, std::size_t cap)
{
    const Condensation cond = condense(map);
    const std::size_t count = cond.components.size();
    std::vector<EdgeSet> found;
    std::vector<bool> included(count, false);
    EdgeSet current = map.complex().empty_edges();

    std::function<void(std::size_t)> visit = [&](std::size_t i) {
        if (found.size() > cap)
            return;
        if (i == count) {
            found.push_back(current);
            return;
        }
        visit(i + 1);
        const bool closed = std::all_of(cond.successors[i].begin(), cond.successors[i].end(),
                                        [&](std::size_t j) { return included[j]; });
        if (!closed)
            return;
        included[i] = true;
        current |= cond.components[i];
        visit(i + 1);
        current -= cond.components[i];
        included[i] = false;
    };
    visit(0);

    if (found.size() > cap)
        throw CapExceededError("Invset⁺ has more than " + std::to_string(cap) +
                                   " members; returning join-irreducible generators",
                               generator_basis(map));
    return BlockLattice(map.complex(), std::move(found), LatticeProvenance::Enumerated);
}

BlockLattice validate_sublattice(std::vector<EdgeSet> sets, const CombMap& map, Warnings* warnings)
{
    const Complex& c = map.complex();
    for (const auto& s : sets) {
        if (s.capacity() != c.grid_edge_count() + 1 || !s.is_subset_of(c.edges()))
            throw LatticeValidationError("set " + to_string(s) + " is not a set of edges of the complex");
        for (auto n = s.first(); n != EdgeSet::npos; n = s.next(n))
            if (!map.image(n).is_subset_of(s))
                throw NotForwardInvariantError("set " + to_string(s) +
                                               " is not forward invariant: edge " +
                                               std::to_string(n) + " maps to " +
                                               to_string(map.image(n)));
    }
    auto adjoin = [&](const EdgeSet& s, const char* what) {
        if (std::find(sets.begin(), sets.end(), s) != sets.end())
            return;
        if (warnings)
            warnings->push_back(std::string("lattice did not contain ") + what + "; adjoined it");
        sets.push_back(s);
    };
    adjoin(c.empty_edges(), "the empty set");
    adjoin(c.edges(), "the full edge set");
    return BlockLattice(c, std::move(sets), LatticeProvenance::UserSupplied);
}

}  // namespace morse_bridge

#pragma once

// Forward-invariant edge sets of a combinatorial map and lattices of them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morse_bridge/comb_map.hpp"
#include "morse_bridge/complex.hpp"
#include "morse_bridge/errors.hpp"
#include "morse_bridge/order.hpp"

namespace morse_bridge {

inline constexpr std::size_t kDefaultInvsetCap = 4096;

enum class LatticeProvenance { Top, Enumerated, UserSupplied, Generated };

std::string to_string(LatticeProvenance p);

/// A join-irreducible block K together with its immediate predecessor ←K.
struct Block {
    std::string name;
    EdgeSet set;
    EdgeSet predecessor;
    std::string predecessor_name;  ///< empty when the predecessor is unnamed
};

/// The join-irreducible part of a block lattice. Enough to recover every
/// band assignment and the Morse tiling without the full lattice.
struct BlockBasis {
    EdgeSet top;
    std::vector<Block> irreducibles;
    LatticeProvenance provenance = LatticeProvenance::Generated;
};

/// A family of edge sets closed under ∩ and ∪ that contains ∅ and the full
/// edge set of its complex. Members are kept sorted (smaller first, then
/// lexicographic) and are named K0, K1, ... in that order.
class BlockLattice {
public:
    BlockLattice(const Complex& complex, std::vector<EdgeSet> members, LatticeProvenance provenance);

    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<EdgeSet>& members() const noexcept { return members_; }
    const EdgeSet& member(std::size_t i) const { return members_.at(i); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> find(const EdgeSet& s) const;
    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return members_.size() - 1; }
    const EdgeSet& top_set() const { return members_.back(); }
    LatticeProvenance provenance() const noexcept { return provenance_; }

    /// Meet = ∩ and join = ∪ as explicit tables.
    order::FiniteLattice to_finite_lattice() const;

    /// Join-irreducibles with predecessors, computed from the sets directly.
    BlockBasis basis() const;

private:
    std::vector<EdgeSet> members_;
    std::vector<std::string> names_;
    LatticeProvenance provenance_;
};

/// Raised when Invset⁺ has more members than the enumeration cap. Carries
/// the join-irreducible generators, one per strongly connected component.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& message, BlockBasis generators)
        : Error(message), generators_(std::move(generators)) {}
    const BlockBasis& generators() const noexcept { return generators_; }

private:
    BlockBasis generators_;
};

/// True iff the images of the edges of `s` stay inside `s`.
bool member_of_invset(const EdgeSet& s, const CombMap& map);

/// Invset⁺ of the map: the down-sets of the reachability order on its
/// strongly connected components.
BlockLattice enumerate_invset(const CombMap& map, std::size_t cap = kDefaultInvsetCap);

/// Reachable sets of the strongly connected components of the map; these are
/// exactly the join-irreducibles of Invset⁺.
BlockBasis generator_basis(const CombMap& map);

/// Checks that a user family is a sublattice of Invset⁺(map). ∅ and the full
/// edge set are adjoined with a warning when missing. Throws
/// NotForwardInvariantError or NotClosedError.
BlockLattice validate_sublattice(std::vector<EdgeSet> sets, const CombMap& map,
                                 Warnings* warnings = nullptr);

}  // namespace morse_bridge

#pragma once

// Finite lattices and posets, represented extensionally.

#include <cstddef>
#include <string>
#include <vector>

namespace morse_bridge::order {

using ElementId = std::size_t;

/// Lattices up to this size have every axiom checked on construction.
/// Larger ones can be checked explicitly with `validate()`.
inline constexpr std::size_t kEagerValidationLimit = 128;

/// A finite bounded lattice given by full meet and join tables.
/// Element identifiers are 0..size()-1; labels are for display only.
class FiniteLattice {
public:
    FiniteLattice(std::vector<std::string> labels, std::vector<ElementId> meet,
                  std::vector<ElementId> join, ElementId bottom, ElementId top);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(ElementId a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    ElementId meet(ElementId a, ElementId b) const { return meet_[index(a, b)]; }
    ElementId join(ElementId a, ElementId b) const { return join_[index(a, b)]; }
    ElementId bottom() const noexcept { return bottom_; }
    ElementId top() const noexcept { return top_; }

    /// a <= b iff a ∧ b = a.
    bool leq(ElementId a, ElementId b) const { return meet(a, b) == a; }

    /// Checks commutativity, associativity, absorption, distributivity and
    /// the neutral-element laws. Throws StructureError naming the first
    /// violation.
    void validate() const;

private:
    std::size_t index(ElementId a, ElementId b) const;

    std::vector<std::string> labels_;
    std::vector<ElementId> meet_;
    std::vector<ElementId> join_;
    ElementId bottom_;
    ElementId top_;
};

/// A finite partial order given by its full relation table.
class Poset {
public:
    /// `leq` is row-major: leq[a * n + b] is true iff a <= b.
    Poset(std::vector<std::string> labels, std::vector<bool> leq);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(ElementId a) const { return labels_.at(a); }
    bool leq(ElementId a, ElementId b) const;
    bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }

    /// Pairs (lower, upper) where upper covers lower.
    std::vector<std::pair<ElementId, ElementId>> covering_relations() const;

    /// The order restricted to the given elements, relabelled 0..k-1 in the
    /// order given.
    Poset subposet(const std::vector<ElementId>& elements) const;

private:
    std::vector<std::string> labels_;
    std::vector<bool> leq_;
};

Poset induced_order(const FiniteLattice& lattice);

struct JoinIrreducible {
    ElementId element;
    ElementId predecessor;  ///< the unique immediate predecessor

    bool operator==(const JoinIrreducible&) const = default;
};

/// Join-irreducible elements in increasing identifier order, each with its
/// immediate predecessor. Throws StructureError when an irreducible element
/// lacks a unique lower cover.
std::vector<JoinIrreducible> join_irreducibles(const FiniteLattice& lattice);

/// ↓(q) in increasing identifier order.
std::vector<ElementId> downset(const Poset& poset, ElementId q);

/// Topological order of the poset, smallest available identifier first.
std::vector<ElementId> linear_extension(const Poset& poset);

}  // namespace morse_bridge::order

#include "morse_bridge/order.hpp"

#include <queue>
#include <sstream>

#include "morse_bridge/errors.hpp"

namespace morse_bridge::order {

FiniteLattice::FiniteLattice(std::vector<std::string> labels, std::vector<ElementId> meet,
                             std::vector<ElementId> join, ElementId bottom, ElementId top)
    : labels_(std::move(labels)), meet_(std::move(meet)), join_(std::move(join)),
      bottom_(bottom), top_(top)
{
    const std::size_t n = labels_.size();
    if (n == 0)
        throw StructureError("a lattice needs at least one element");
    if (meet_.size() != n * n || join_.size() != n * n)
        throw StructureError("meet/join tables must be size*size");
    if (bottom_ >= n || top_ >= n)
        throw StructureError("bottom/top out of range");
    for (std::size_t i = 0; i < n * n; ++i)
        if (meet_[i] >= n || join_[i] >= n)
            throw StructureError("meet/join table entry out of range");
    if (n <= kEagerValidationLimit)
        validate();
}

std::size_t FiniteLattice::index(ElementId a, ElementId b) const
{
    if (a >= size() || b >= size())
        throw UnknownElementError("lattice element out of range");
    return a * size() + b;
}

void FiniteLattice::validate() const
{
    const std::size_t n = size();
    auto fail = [&](const std::string& law, ElementId a, ElementId b, ElementId c) {
        std::ostringstream os;
        os << "lattice violates " << law << " at (" << label(a) << ", " << label(b) << ", "
           << label(c) << ")";
        throw StructureError(os.str());
    };
    for (ElementId a = 0; a < n; ++a) {
        if (meet(bottom_, a) != bottom_ || join(bottom_, a) != a)
            fail("bottom neutrality", bottom_, a, a);
        if (meet(top_, a) != a || join(top_, a) != top_)
            fail("top neutrality", top_, a, a);
        for (ElementId b = 0; b < n; ++b) {
            if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a))
                fail("commutativity", a, b, b);
            if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a)
                fail("absorption", a, b, b);
            for (ElementId c = 0; c < n; ++c) {
                if (meet(a, meet(b, c)) != meet(meet(a, b), c) ||
                    join(a, join(b, c)) != join(join(a, b), c))
                    fail("associativity", a, b, c);
                if (join(a, meet(b, c)) != meet(join(a, b), join(a, c)))
                    fail("distributivity", a, b, c);
            }
        }
    }
}

Poset::Poset(std::vector<std::string> labels, std::vector<bool> leq)
    : labels_(std::move(labels)), leq_(std::move(leq))
{
    const std::size_t n = labels_.size();
    if (leq_.size() != n * n)
        throw StructureError("poset relation table must be size*size");
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq_[a * n + a])
            throw StructureError("poset relation is not reflexive at " + labels_[a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq_[a * n + b] && leq_[b * n + a])
                throw StructureError("poset relation is not anti-symmetric at " + labels_[a] +
                                     ", " + labels_[b]);
            if (!leq_[a * n + b])
                continue;
            for (std::size_t c = 0; c < n; ++c)
                if (leq_[b * n + c] && !leq_[a * n + c])
                    throw StructureError("poset relation is not transitive at " + labels_[a] +
                                         ", " + labels_[b] + ", " + labels_[c]);
        }
    }
}

bool Poset::leq(ElementId a, ElementId b) const
{
    if (a >= size() || b >= size())
        throw UnknownElementError("poset element out of range");
    return leq_[a * size() + b];
}

std::vector<std::pair<ElementId, ElementId>> Poset::covering_relations() const
{
    std::vector<std::pair<ElementId, ElementId>> covers;
    const std::size_t n = size();
    for (ElementId lo = 0; lo < n; ++lo)
        for (ElementId hi = 0; hi < n; ++hi) {
            if (!less(lo, hi))
                continue;
            bool direct = true;
            for (ElementId mid = 0; mid < n && direct; ++mid)
                if (less(lo, mid) && less(mid, hi))
                    direct = false;
            if (direct)
                covers.emplace_back(lo, hi);
        }
    return covers;
}

Poset Poset::subposet(const std::vector<ElementId>& elements) const
{
    const std::size_t k = elements.size();
    std::vector<std::string> labels;
    labels.reserve(k);
    for (ElementId e : elements)
        labels.push_back(label(e));
    std::vector<bool> rel(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            rel[i * k + j] = leq(elements[i], elements[j]);
    return Poset(std::move(labels), std::move(rel));
}

Poset induced_order(const FiniteLattice& lattice)
{
    const std::size_t n = lattice.size();
    std::vector<bool> rel(n * n);
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            rel[a * n + b] = lattice.leq(a, b);
    return Poset(lattice.labels(), std::move(rel));
}

std::vector<JoinIrreducible> join_irreducibles(const FiniteLattice& lattice)
{
    const std::size_t n = lattice.size();
    std::vector<JoinIrreducible> result;
    for (ElementId c = 0; c < n; ++c) {
        if (c == lattice.bottom())
            continue;
        bool irreducible = true;
        for (ElementId a = 0; a < n && irreducible; ++a)
            for (ElementId b = 0; b < n && irreducible; ++b)
                if (lattice.join(a, b) == c && a != c && b != c)
                    irreducible = false;
        if (!irreducible)
            continue;

        std::vector<ElementId> covers;
        for (ElementId a = 0; a < n; ++a) {
            if (a == c || !lattice.leq(a, c))
                continue;
            bool maximal = true;
            for (ElementId m = 0; m < n && maximal; ++m)
                if (m != a && m != c && lattice.leq(a, m) && lattice.leq(m, c))
                    maximal = false;
            if (maximal)
                covers.push_back(a);
        }
        if (covers.size() != 1)
            throw StructureError("join-irreducible " + lattice.label(c) +
                                 " has no unique immediate predecessor");
        result.push_back({c, covers.front()});
    }
    return result;
}

std::vector<ElementId> downset(const Poset& poset, ElementId q)
{
    if (q >= poset.size())
        throw UnknownElementError("downset of unknown element");
    std::vector<ElementId> result;
    for (ElementId p = 0; p < poset.size(); ++p)
        if (poset.leq(p, q))
            result.push_back(p);
    return result;
}

std::vector<ElementId> linear_extension(const Poset& poset)
{
    const std::size_t n = poset.size();
    std::vector<std::size_t> pending(n, 0);
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (poset.less(a, b))
                ++pending[b];

    std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
    for (ElementId a = 0; a < n; ++a)
        if (pending[a] == 0)
            ready.push(a);

    std::vector<ElementId> order;
    order.reserve(n);
    while (!ready.empty()) {
        const ElementId a = ready.top();
        ready.pop();
        order.push_back(a);
        for (ElementId b = 0; b < n; ++b)
            if (poset.less(a, b) && --pending[b] == 0)
                ready.push(b);
    }
    if (order.size() != n)
        throw CycleError("order relation contains a cycle");
    return order;
}

}  // namespace morse_bridge::order

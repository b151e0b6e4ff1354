#include "morse_bridge/conley.hpp"

#include <algorithm>

#include "morse_bridge/errors.hpp"

namespace morse_bridge {

namespace {

std::size_t position(const std::vector<std::size_t>& sorted, std::size_t value)
{
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    if (it == sorted.end() || *it != value)
        throw InvarianceError("cell " + std::to_string(value) + " is not part of the pair");
    return static_cast<std::size_t>(it - sorted.begin());
}

bool is_run(const EdgeSet& s)
{
    return !s.empty() && geometric_realization(s).size() == 1;
}

IntMatrix boundary_matrix(const std::vector<std::size_t>& vertices, const std::vector<std::size_t>& edges)
{
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(vertices.size()),
                                  static_cast<Eigen::Index>(edges.size()));
    for (std::size_t j = 0; j < edges.size(); ++j) {
        const std::size_t n = edges[j];
        const auto lo = std::lower_bound(vertices.begin(), vertices.end(), n - 1);
        if (lo != vertices.end() && *lo == n - 1)
            d(lo - vertices.begin(), static_cast<Eigen::Index>(j)) -= 1;
        const auto hi = std::lower_bound(vertices.begin(), vertices.end(), n);
        if (hi != vertices.end() && *hi == n)
            d(hi - vertices.begin(), static_cast<Eigen::Index>(j)) += 1;
    }
    return d;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in index invariants");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in index invariants");
    return r;
}

IntMatrix checked_product(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
        }
    return c;
}

std::int64_t trace(const IntMatrix& a)
{
    std::int64_t t = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        t = checked_add(t, a(i, i));
    return t;
}

void check_pair(const IndexPair& pair, const CombMap& map)
{
    const Complex& c = map.complex();
    c.require_subset(pair.upper, "index pair upper set");
    c.require_subset(pair.lower, "index pair lower set");
    if (!pair.lower.is_subset_of(pair.upper))
        throw InvarianceError("index pair lower set is not contained in the upper set");
    for (const EdgeSet* s : {&pair.upper, &pair.lower})
        for (auto n = s->first(); n != EdgeSet::npos; n = s->next(n)) {
            if (!map.image(n).is_subset_of(*s))
                throw InvarianceError("index pair set " + to_string(*s) +
                                      " is not forward invariant at edge " + std::to_string(n));
            if (!is_run(map.image(n)))
                throw NonIntervalError("image of edge " + std::to_string(n) +
                                       " is not an interval; refusing to compute an index");
        }
}

}  // namespace

ChainComplex1D relative_chain_complex(const IndexPair& pair, const Complex& complex)
{
    complex.require_subset(pair.upper, "index pair upper set");
    complex.require_subset(pair.lower, "index pair lower set");
    if (!pair.lower.is_subset_of(pair.upper))
        throw InvarianceError("index pair lower set is not contained in the upper set");
    const CellSet up = complex.closure(pair.upper);
    const CellSet lo = complex.closure(pair.lower);
    ChainComplex1D cc;
    cc.vertices = (up.vertices - lo.vertices).members();
    cc.edges = (up.edges - lo.edges).members();
    cc.boundary = boundary_matrix(cc.vertices, cc.edges);
    return cc;
}

RelativeHomology relative_homology(const IndexPair& pair, const Complex& complex)
{
    RelativeHomology h;
    h.chains = relative_chain_complex(pair, complex);
    const IntMatrix& d = h.chains.boundary;
    const Eigen::Index m = d.rows();
    const Eigen::Index n = d.cols();
    const SmithForm snf = smith_normal_form(d);
    for (Eigen::Index i = 0; i < snf.rank; ++i)
        if (snf.D(i, i) != 1)
            throw TorsionError("relative homology has torsion (invariant factor " +
                               std::to_string(snf.D(i, i)) + ")");
    const Eigen::Index r = snf.rank;
    h.basis[0] = snf.P_inv.rightCols(m - r);
    h.coordinates[0] = snf.P.bottomRows(m - r);
    h.basis[1] = snf.Q.rightCols(n - r);
    h.coordinates[1] = snf.Q_inv.bottomRows(n - r);
    return h;
}

std::size_t leftmost_selector(std::size_t, const std::vector<std::size_t>& candidates)
{
    return candidates.front();
}

std::vector<std::vector<std::size_t>> admissible_vertices(const IndexPair& pair, const FullMap& map)
{
    check_pair(pair, map.top);
    const Complex& c = map.complex();
    const CellSet up = c.closure(pair.upper);
    const CellSet lo = c.closure(pair.lower);
    std::vector<std::vector<std::size_t>> out(c.grid_edge_count() + 1);
    for (auto v = up.vertices.first(); v != VertexSet::npos; v = up.vertices.next(v)) {
        const EdgeSet& source = lo.vertices.contains(v) ? pair.lower : pair.upper;
        EdgeSet image = c.empty_edges();
        for (std::size_t e : c.edges_at(v))
            if (source.contains(e))
                image |= map.top.image(e);
        if (!is_run(image))
            throw NonIntervalError("admissible image of vertex " + std::to_string(v) +
                                   " is not an interval");
        out[v] = c.closure(image).vertices.members();
    }
    return out;
}

ChainSelector chain_selector(const IndexPair& pair, const FullMap& map, const VertexSelector& select)
{
    const auto candidates = admissible_vertices(pair, map);
    const Complex& c = map.complex();
    const CellSet up = c.closure(pair.upper);
    const CellSet lo = c.closure(pair.lower);

    ChainSelector cs;
    cs.vertices = up.vertices.members();
    cs.edges = up.edges.members();
    cs.boundary = boundary_matrix(cs.vertices, cs.edges);
    const auto nv = static_cast<Eigen::Index>(cs.vertices.size());
    const auto ne = static_cast<Eigen::Index>(cs.edges.size());
    cs.vertex_map = IntMatrix::Zero(nv, nv);
    cs.edge_map = IntMatrix::Zero(ne, ne);

    std::vector<std::size_t> sigma(c.grid_edge_count() + 1, 0);
    for (std::size_t i = 0; i < cs.vertices.size(); ++i) {
        const std::size_t v = cs.vertices[i];
        const auto& cand = candidates[v];
        const std::size_t s = select(v, cand);
        if (!std::binary_search(cand.begin(), cand.end(), s))
            throw InvarianceError("selector picked a vertex outside the admissible image of " +
                                  std::to_string(v));
        sigma[v] = s;
        cs.vertex_map(static_cast<Eigen::Index>(position(cs.vertices, s)), static_cast<Eigen::Index>(i)) = 1;
    }

    for (std::size_t j = 0; j < cs.edges.size(); ++j) {
        const std::size_t n = cs.edges[j];
        const std::size_t a = sigma[n - 1];
        const std::size_t b = sigma[n];
        const std::int64_t sign = a <= b ? 1 : -1;
        const EdgeSet& home = pair.lower.contains(n) ? pair.lower : pair.upper;
        for (std::size_t k = std::min(a, b) + 1; k <= std::max(a, b); ++k) {
            if (!home.contains(k))
                throw InvarianceError("selector path of edge " + std::to_string(n) +
                                      " leaves the pair at edge " + std::to_string(k));
            cs.edge_map(static_cast<Eigen::Index>(position(cs.edges, k)), static_cast<Eigen::Index>(j)) += sign;
        }
    }

    if (!(cs.boundary * cs.edge_map == cs.vertex_map * cs.boundary))
        throw Error("chain selector is not a chain map");
    return cs;
}

ConleyIndex induced_map(const IndexPair& pair, const FullMap& map, const VertexSelector& select)
{
    const RelativeHomology h = relative_homology(pair, map.complex());
    const ChainSelector cs = chain_selector(pair, map, select);

    auto project = [](const IntMatrix& full, const std::vector<std::size_t>& all,
                      const std::vector<std::size_t>& rel) {
        const auto k = static_cast<Eigen::Index>(rel.size());
        IntMatrix out(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < k; ++j)
                out(i, j) = full(static_cast<Eigen::Index>(position(all, rel[i])),
                                 static_cast<Eigen::Index>(position(all, rel[j])));
        return out;
    };
    const IntMatrix f0 = project(cs.vertex_map, cs.vertices, h.chains.vertices);
    const IntMatrix f1 = project(cs.edge_map, cs.edges, h.chains.edges);

    const IntMatrix cycles = f1 * h.basis[1];
    if (cycles.size() > 0 && !(h.chains.boundary * cycles).isZero())
        throw Error("induced edge map does not preserve relative cycles");

    ConleyIndex idx;
    idx.maps[0] = h.coordinates[0] * f0 * h.basis[0];
    idx.maps[1] = h.coordinates[1] * cycles;
    return idx;
}

ShiftInvariants shift_invariants(const IntMatrix& A)
{
    if (A.rows() != A.cols())
        throw InputError("shift invariants need a square matrix");
    const Eigen::Index k = A.rows();

    // Faddeev-LeVerrier: all divisions are exact for integer matrices.
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(k) + 1, 0);  // coeff[i] of x^i
    coeff[static_cast<std::size_t>(k)] = 1;
    IntMatrix M = IntMatrix::Zero(k, k);
    for (Eigen::Index i = 1; i <= k; ++i) {
        M = checked_product(A, M);
        for (Eigen::Index d = 0; d < k; ++d)
            M(d, d) = checked_add(M(d, d), coeff[static_cast<std::size_t>(k - i + 1)]);
        const std::int64_t t = trace(checked_product(A, M));
        coeff[static_cast<std::size_t>(k - i)] = -t / i;
    }

    std::size_t low = 0;
    while (low < coeff.size() - 1 && coeff[low] == 0)
        ++low;
    ShiftInvariants inv;
    for (std::size_t i = coeff.size(); i-- > low;)
        inv.charpoly.push_back(coeff[i]);
    inv.eventual_rank = inv.charpoly.size() - 1;

    IntMatrix power = IntMatrix::Identity(k, k);
    for (std::size_t j = 0; j < inv.eventual_rank; ++j) {
        power = checked_product(power, A);
        inv.traces.push_back(trace(power));
    }
    return inv;
}

std::array<ShiftInvariants, 2> shift_invariants(const ConleyIndex& index)
{
    return {shift_invariants(index.maps[0]), shift_invariants(index.maps[1])};
}

std::string to_string(IndexTag tag)
{
    switch (tag) {
    case IndexTag::FixedPoint: return "fixed-point";
    case IndexTag::UnstableFixedPoint: return "unstable-fixed-point";
    case IndexTag::PeriodTwoOrbit: return "period-2-orbit";
    }
    return "unknown";
}

std::vector<IndexTag> interpret_index(const ConleyIndex& index)
{
    const auto inv = shift_invariants(index);
    const ShiftInvariants id = shift_invariants(IntMatrix::Identity(1, 1));
    const ShiftInvariants minus_id = shift_invariants(IntMatrix::Constant(1, 1, -1));
    IntMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    const ShiftInvariants period_two = shift_invariants(swap);

    std::vector<IndexTag> tags;
    if (inv[1].trivial() && inv[0] == id)
        tags.push_back(IndexTag::FixedPoint);
    if (inv[0].trivial() && (inv[1] == id || inv[1] == minus_id))
        tags.push_back(IndexTag::UnstableFixedPoint);
    if (inv[1].trivial() && inv[0] == period_two)
        tags.push_back(IndexTag::PeriodTwoOrbit);
    return tags;
}

}  // namespace morse_bridge

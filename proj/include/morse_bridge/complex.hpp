#pragma once

// The one-dimensional simplicial complex spanned by the data grid.
//
// Vertices are numbered 0..N at the data x-coordinates; edge n (1..N) is
// [x_{n-1}, x_n]. Every set operation in the pipeline works on these
// integer indices; only the y-values and the x-coordinates are real.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace morse_bridge {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Interpolation points plus the variance parameter.
struct DataSet {
    std::vector<Point> points;
    double sigma2 = 1.0;

    std::size_t edge_count() const noexcept { return points.empty() ? 0 : points.size() - 1; }
};

/// Throws InputError unless x is strictly increasing, sigma2 > 0, there are
/// at least two points and every y lies strictly between x_0 and x_N.
void validate_dataset(const DataSet& data);

/// A set of integer cell indices drawn from 0..capacity-1. The tag keeps
/// edge sets and vertex sets apart.
template <class Tag>
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t capacity) : bits_(capacity) {}

    std::size_t capacity() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    bool contains(std::size_t i) const noexcept { return i < bits_.size() && bits_.test(i); }
    void insert(std::size_t i) { bits_.set(i); }
    void erase(std::size_t i) { bits_.reset(i); }

    bool is_subset_of(const IndexSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const IndexSet& other) const { return bits_.intersects(other.bits_); }

    IndexSet& operator|=(const IndexSet& o) { bits_ |= o.bits_; return *this; }
    IndexSet& operator&=(const IndexSet& o) { bits_ &= o.bits_; return *this; }
    IndexSet& operator-=(const IndexSet& o) { bits_ -= o.bits_; return *this; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

    /// Smaller sets first, then lexicographic on the sorted member list.
    friend bool operator<(const IndexSet& a, const IndexSet& b)
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.members() < b.members();
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
            out.push_back(i);
        return out;
    }

    /// Smallest member; npos when empty.
    std::size_t first() const noexcept { return bits_.find_first(); }
    std::size_t next(std::size_t i) const noexcept { return bits_.find_next(i); }
    static constexpr std::size_t npos = boost::dynamic_bitset<>::npos;

    std::size_t hash() const;

private:
    boost::dynamic_bitset<> bits_;
};

struct EdgeTag {};
struct VertexTag {};
using EdgeSet = IndexSet<EdgeTag>;
using VertexSet = IndexSet<VertexTag>;

template <class Tag>
std::size_t IndexSet<Tag>::hash() const
{
    std::size_t h = bits_.size();
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        h = h * 1000003u ^ (i + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    return h;
}

struct IndexSetHash {
    template <class Tag>
    std::size_t operator()(const IndexSet<Tag>& s) const { return s.hash(); }
};

/// Closed interval [x_first, x_last] of the grid, addressed by vertex index.
struct VertexInterval {
    std::size_t first = 0;
    std::size_t last = 0;

    auto operator<=>(const VertexInterval&) const = default;
};

/// Cells of a subcomplex: a set of edges together with a set of vertices.
struct CellSet {
    EdgeSet edges;
    VertexSet vertices;

    bool operator==(const CellSet&) const = default;
};

/// The complex X(T), possibly restricted to a subset of its edges. Edge and
/// vertex indices always refer to the unrestricted grid.
class Complex {
public:
    Complex(std::vector<double> x_coords, EdgeSet edges);

    /// Number of edges of the unrestricted grid (N).
    std::size_t grid_edge_count() const noexcept { return x_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    const EdgeSet& edges() const noexcept { return edges_; }
    const VertexSet& vertices() const noexcept { return vertices_; }
    bool has_edge(std::size_t n) const noexcept { return edges_.contains(n); }
    bool has_vertex(std::size_t v) const noexcept { return vertices_.contains(v); }

    double x(std::size_t vertex) const { return x_.at(vertex); }
    const std::vector<double>& x_coords() const noexcept { return x_; }

    EdgeSet empty_edges() const { return EdgeSet(x_.size()); }
    VertexSet empty_vertices() const { return VertexSet(x_.size()); }

    /// Edges of this complex adjacent to the vertex (one or two).
    std::vector<std::size_t> edges_at(std::size_t vertex) const;

    /// ↓ of an edge set: the edges with all their vertices.
    CellSet closure(const EdgeSet& edges) const;

    /// Edges of this complex contained in [x_first, x_last].
    EdgeSet edges_in(VertexInterval interval) const;

    /// Throws InputError unless `s` lives on this complex.
    void require_subset(const EdgeSet& s, const std::string& what) const;

    bool operator==(const Complex& other) const = default;

private:
    std::vector<double> x_;
    EdgeSet edges_;
    VertexSet vertices_;
};

/// The complex with N+1 vertices and N edges spanned by the data.
Complex build_complex(const DataSet& data);

/// Maximal runs of consecutive edges as closed vertex intervals, left to right.
std::vector<VertexInterval> geometric_realization(const EdgeSet& s);

/// Edges [first+1 .. last] of each interval; inverse of geometric_realization.
EdgeSet edges_of(const std::vector<VertexInterval>& intervals, std::size_t grid_edges);

/// Sub-complex of the kept edges and their faces. Throws InputError when
/// `keep` is empty or not part of `c`.
Complex restrict_complex(const Complex& c, const EdgeSet& keep);

std::string to_string(const EdgeSet& s);

}  // namespace morse_bridge

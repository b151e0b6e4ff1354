#include "morse_bridge/complex.hpp"

#include <cmath>
#include <sstream>

#include "morse_bridge/errors.hpp"

namespace morse_bridge {

void validate_dataset(const DataSet& data)
{
    if (data.points.size() < 2)
        throw InputError("a data set needs at least two points");
    if (!(data.sigma2 > 0.0) || !std::isfinite(data.sigma2))
        throw InputError("sigma2 must be a positive finite number");
    for (std::size_t n = 0; n < data.points.size(); ++n) {
        const auto& p = data.points[n];
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InputError("point " + std::to_string(n) + " is not finite");
        if (n > 0 && !(data.points[n - 1].x < p.x))
            throw InputError("x-coordinates must be strictly increasing (point " +
                             std::to_string(n) + ")");
    }
    const double x0 = data.points.front().x;
    const double xN = data.points.back().x;
    for (std::size_t n = 0; n < data.points.size(); ++n) {
        const double y = data.points[n].y;
        if (!(x0 < y && y < xN)) {
            std::ostringstream os;
            os << "y_" << n << " = " << y << " must lie strictly inside (" << x0 << ", " << xN
               << ")";
            throw InputError(os.str());
        }
    }
}

Complex::Complex(std::vector<double> x_coords, EdgeSet edges)
    : x_(std::move(x_coords)), edges_(std::move(edges)), vertices_(x_.size())
{
    if (x_.size() < 2)
        throw InputError("a complex needs at least two vertices");
    if (edges_.capacity() != x_.size())
        throw InputError("edge set capacity does not match the grid");
    if (edges_.contains(0))
        throw InputError("edge indices start at 1");
    if (edges_.empty())
        throw InputError("a complex needs at least one edge");
    for (auto n = edges_.first(); n != EdgeSet::npos; n = edges_.next(n)) {
        vertices_.insert(n - 1);
        vertices_.insert(n);
    }
}

std::vector<std::size_t> Complex::edges_at(std::size_t vertex) const
{
    std::vector<std::size_t> out;
    if (vertex >= 1 && has_edge(vertex))
        out.push_back(vertex);
    if (has_edge(vertex + 1))
        out.push_back(vertex + 1);
    return out;
}

CellSet Complex::closure(const EdgeSet& edges) const
{
    CellSet cells{edges, empty_vertices()};
    for (auto n = edges.first(); n != EdgeSet::npos; n = edges.next(n)) {
        cells.vertices.insert(n - 1);
        cells.vertices.insert(n);
    }
    return cells;
}

EdgeSet Complex::edges_in(VertexInterval interval) const
{
    EdgeSet s = empty_edges();
    for (std::size_t n = interval.first + 1; n <= interval.last; ++n)
        if (has_edge(n))
            s.insert(n);
    return s;
}

void Complex::require_subset(const EdgeSet& s, const std::string& what) const
{
    if (s.capacity() != x_.size() || !s.is_subset_of(edges_))
        throw InputError(what + " " + to_string(s) + " is not a set of edges of the complex");
}

Complex build_complex(const DataSet& data)
{
    validate_dataset(data);
    std::vector<double> xs;
    xs.reserve(data.points.size());
    for (const auto& p : data.points)
        xs.push_back(p.x);
    EdgeSet all(xs.size());
    for (std::size_t n = 1; n < xs.size(); ++n)
        all.insert(n);
    return Complex(std::move(xs), std::move(all));
}

std::vector<VertexInterval> geometric_realization(const EdgeSet& s)
{
    std::vector<VertexInterval> out;
    for (auto n = s.first(); n != EdgeSet::npos; n = s.next(n)) {
        if (!out.empty() && out.back().last == n - 1)
            out.back().last = n;
        else
            out.push_back({n - 1, n});
    }
    return out;
}

EdgeSet edges_of(const std::vector<VertexInterval>& intervals, std::size_t grid_edges)
{
    EdgeSet s(grid_edges + 1);
    for (const auto& iv : intervals) {
        if (iv.first >= iv.last || iv.last > grid_edges)
            throw InputError("vertex interval [" + std::to_string(iv.first) + ", " +
                             std::to_string(iv.last) + "] is not a valid grid interval");
        for (std::size_t n = iv.first + 1; n <= iv.last; ++n)
            s.insert(n);
    }
    return s;
}

Complex restrict_complex(const Complex& c, const EdgeSet& keep)
{
    if (keep.empty())
        throw InputError("cannot restrict a complex to an empty edge set");
    c.require_subset(keep, "restriction");
    return Complex(c.x_coords(), keep);
}

std::string to_string(const EdgeSet& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto n = s.first(); n != EdgeSet::npos; n = s.next(n)) {
        os << (first ? "" : ",") << n;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace morse_bridge

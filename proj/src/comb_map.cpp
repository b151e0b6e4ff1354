#include "morse_bridge/comb_map.hpp"

#include <algorithm>
#include <sstream>

namespace morse_bridge {

namespace {

bool is_run(const EdgeSet& s)
{
    if (s.empty())
        return true;
    return geometric_realization(s).size() == 1;
}

}  // namespace

CombMap::CombMap(Complex complex, std::vector<EdgeSet> images)
    : complex_(std::move(complex)), images_(std::move(images))
{
    const std::size_t cap = complex_.grid_edge_count() + 1;
    if (images_.size() != cap)
        throw InputError("a combinatorial map needs one image slot per grid edge");
    for (std::size_t n = 0; n < cap; ++n) {
        auto& img = images_[n];
        if (img.capacity() == 0)
            img = complex_.empty_edges();
        if (!complex_.has_edge(n)) {
            if (!img.empty())
                throw InputError("edge " + std::to_string(n) + " is not in the complex but has an image");
            continue;
        }
        if (img.empty())
            throw EmptyImageError("edge " + std::to_string(n) + " has an empty image");
        complex_.require_subset(img, "image of edge " + std::to_string(n));
        if (!is_run(img))
            interval_valued_ = false;
    }
}

EdgeSet CombMap::apply(const EdgeSet& s) const
{
    EdgeSet out = complex_.empty_edges();
    for (auto n = s.first(); n != EdgeSet::npos; n = s.next(n))
        out |= image(n);
    return out;
}

CombMap build_F_mu(const DataSet& data, const Complex& complex, Warnings* warnings)
{
    validate_dataset(data);
    if (complex.grid_edge_count() != data.edge_count())
        throw ComplexMismatchError("complex was not built from this data set");

    if (warnings) {
        const auto& xs = complex.x_coords();
        for (std::size_t n = 0; n < data.points.size(); ++n)
            if (std::find(xs.begin(), xs.end(), data.points[n].y) != xs.end()) {
                std::ostringstream os;
                os << "y_" << n << " = " << data.points[n].y
                   << " coincides with a grid coordinate; the minimal map sits on a vertex";
                warnings->push_back(os.str());
            }
    }

    std::vector<EdgeSet> images(complex.grid_edge_count() + 1, complex.empty_edges());
    const EdgeSet& edges = complex.edges();
    for (auto n = edges.first(); n != EdgeSet::npos; n = edges.next(n)) {
        const double lo = std::min(data.points[n - 1].y, data.points[n].y);
        const double hi = std::max(data.points[n - 1].y, data.points[n].y);
        for (auto k = edges.first(); k != EdgeSet::npos; k = edges.next(k))
            if (complex.x(k - 1) <= hi && complex.x(k) >= lo)
                images[n].insert(k);
    }
    return CombMap(complex, std::move(images));
}

CombMap build_F_K(const Complex& complex, const std::vector<VertexInterval>& bands)
{
    if (bands.size() != complex.grid_edge_count() + 1)
        throw InputError("build_F_K needs one band slot per grid edge");
    std::vector<EdgeSet> images(bands.size(), complex.empty_edges());
    const EdgeSet& edges = complex.edges();
    for (auto n = edges.first(); n != EdgeSet::npos; n = edges.next(n)) {
        const auto& band = bands[n];
        if (!(band.first < band.last) || band.last > complex.grid_edge_count())
            throw GridError("band of edge " + std::to_string(n) + " is not a grid interval");
        images[n] = complex.edges_in(band);
    }
    return CombMap(complex, std::move(images));
}

CombMap build_F_K(const Complex& complex, const std::vector<std::pair<double, double>>& bands)
{
    const auto& xs = complex.x_coords();
    auto vertex_of = [&](double value, std::size_t edge) {
        const auto it = std::find(xs.begin(), xs.end(), value);
        if (it == xs.end()) {
            std::ostringstream os;
            os << "band end " << value << " of edge " << edge << " is not a grid coordinate";
            throw GridError(os.str());
        }
        return static_cast<std::size_t>(it - xs.begin());
    };
    if (bands.size() != complex.grid_edge_count() + 1)
        throw InputError("build_F_K needs one band slot per grid edge");
    std::vector<VertexInterval> idx(bands.size());
    const EdgeSet& edges = complex.edges();
    for (auto n = edges.first(); n != EdgeSet::npos; n = edges.next(n))
        idx[n] = {vertex_of(bands[n].first, n), vertex_of(bands[n].second, n)};
    return build_F_K(complex, idx);
}

bool is_enclosure(const CombMap& inner, const CombMap& outer)
{
    if (!(inner.complex() == outer.complex()))
        throw ComplexMismatchError("enclosure check between maps on different complexes");
    const EdgeSet& edges = inner.complex().edges();
    for (auto n = edges.first(); n != EdgeSet::npos; n = edges.next(n))
        if (!inner.image(n).is_subset_of(outer.image(n)))
            return false;
    return true;
}

FullMap extend_full(const CombMap& map)
{
    const Complex& c = map.complex();
    std::vector<CellSet> vertex_images(c.grid_edge_count() + 1,
                                       CellSet{c.empty_edges(), c.empty_vertices()});
    const VertexSet& vertices = c.vertices();
    for (auto v = vertices.first(); v != VertexSet::npos; v = vertices.next(v)) {
        EdgeSet u = c.empty_edges();
        for (std::size_t e : c.edges_at(v))
            u |= map.image(e);
        vertex_images[v] = c.closure(u);
    }
    return FullMap{map, std::move(vertex_images)};
}

CombMap restrict_map(const CombMap& map, const EdgeSet& keep)
{
    Complex sub = restrict_complex(map.complex(), keep);
    std::vector<EdgeSet> images(map.images().size(), sub.empty_edges());
    for (auto n = keep.first(); n != EdgeSet::npos; n = keep.next(n)) {
        images[n] = map.image(n) & keep;
        if (images[n].empty())
            throw EmptyImageError("restriction empties the image of edge " + std::to_string(n) +
                                  "; the kept region is not self-contained");
    }
    return CombMap(std::move(sub), std::move(images));
}

}  // namespace morse_bridge

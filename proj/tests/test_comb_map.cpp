#include <doctest.h>

#include "morse_bridge/comb_map.hpp"
#include "morse_bridge/errors.hpp"
#include "support.hpp"

using namespace morse_bridge;
using support::edge_range;
using support::edges;

namespace {

std::vector<VertexInterval> example3_bands()
{
    std::vector<VertexInterval> b(11);
    for (std::size_t n : {1, 2, 9, 10})
        b[n] = {0, 10};
    for (std::size_t n : {3, 4})
        b[n] = {6, 8};
    for (std::size_t n : {5, 6})
        b[n] = {2, 8};
    for (std::size_t n : {7, 8})
        b[n] = {2, 4};
    return b;
}

}  // namespace

TEST_CASE("Example 1: every image lies in edges 5 and 6")
{
    const DataSet d = support::example1();
    const CombMap f = build_F_mu(d, build_complex(d));
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(f.image(n).is_subset_of(edges(10, {5, 6})));
    CHECK(f.image(1) == edges(10, {5}));
    CHECK(f.interval_valued());
}

TEST_CASE("Example 2 images")
{
    const DataSet d = support::example2();
    const CombMap f = build_F_mu(d, build_complex(d));
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(f.image(n) == edges(10, {3}));
    CHECK(f.image(5) == edge_range(10, 3, 6));
    CHECK(f.image(6) == edge_range(10, 6, 9));
    for (std::size_t n = 7; n <= 10; ++n)
        CHECK(f.image(n) == edges(10, {9}));
}

TEST_CASE("Example 3 images")
{
    const DataSet d = support::example3();
    const CombMap f = build_F_mu(d, build_complex(d));
    CHECK(f.image(1) == edges(10, {1}));
    CHECK(f.image(2) == edge_range(10, 1, 7));
    CHECK(f.image(3) == edges(10, {7}));
    CHECK(f.image(4) == edges(10, {7}));
    CHECK(f.image(5) == edges(10, {6, 7}));
    CHECK(f.image(6) == edge_range(10, 3, 6));
    CHECK(f.image(7) == edges(10, {3, 4}));
    CHECK(f.image(8) == edges(10, {3, 4}));
    CHECK(f.image(9) == edge_range(10, 3, 10));
    CHECK(f.image(10) == edges(10, {10}));
}

TEST_CASE("a value inside one edge hits that edge only; a value on a vertex hits both and warns")
{
    const DataSet inside = support::grid_data({0.45, 0.45, 0.45, 0.45}, 1.0);
    const CombMap f = build_F_mu(inside, build_complex(inside));
    CHECK(f.image(2) == edges(3, {2}));

    const DataSet knife = support::grid_data({0.45, 2.0 / 3.0, 0.45, 0.45}, 1.0);
    Warnings w;
    const CombMap g = build_F_mu(knife, build_complex(knife), &w);
    CHECK(g.image(3) == edges(3, {2}));
    CHECK(g.image(1) == edges(3, {2, 3}));
    CHECK(w.size() == 1);
}

TEST_CASE("outer map of Example 3")
{
    const Complex c = build_complex(support::example3());
    const CombMap fk = build_F_K(c, example3_bands());
    CHECK(fk.image(3) == edges(10, {7, 8}));
    CHECK(fk.image(4) == edges(10, {7, 8}));
    for (std::size_t n : {1, 2, 9, 10})
        CHECK(fk.image(n) == c.edges());
    CHECK(fk.interval_valued());
}

TEST_CASE("outer map from coordinates")
{
    const Complex c = build_complex(support::example3());
    std::vector<std::pair<double, double>> b(11, {0.0, 1.0});
    const CombMap full = build_F_K(c, b);
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(full.image(n) == c.edges());
    b[4] = {0.6, 0.8};
    CHECK(build_F_K(c, b).image(4) == edges(10, {7, 8}));
    b[4] = {0.6, 0.85};
    CHECK_THROWS_AS(build_F_K(c, b), GridError);
}

TEST_CASE("enclosure")
{
    const DataSet d = support::example3();
    const Complex c = build_complex(d);
    const CombMap mu = build_F_mu(d, c);
    const CombMap fk = build_F_K(c, example3_bands());
    CHECK(is_enclosure(mu, mu));
    CHECK(is_enclosure(mu, fk));
    CHECK_FALSE(is_enclosure(fk, mu));

    auto images = mu.images();
    images[2] = edge_range(10, 1, 6);
    CHECK_FALSE(is_enclosure(mu, CombMap(c, images)));

    const Complex r = restrict_complex(c, edge_range(10, 3, 8));
    CHECK_THROWS_AS(is_enclosure(mu, restrict_map(mu, edge_range(10, 3, 8))), ComplexMismatchError);
    (void)r;
}

TEST_CASE("maps are validated")
{
    const Complex c = support::grid_complex(3);
    std::vector<EdgeSet> images(4, edges(3, {1}));
    images[0] = edges(3, {});
    images[2] = edges(3, {});
    CHECK_THROWS_AS(CombMap(c, images), EmptyImageError);
    images[2] = edges(3, {1, 3});
    CHECK_FALSE(CombMap(c, images).interval_valued());
}

TEST_CASE("extension to vertices")
{
    const Complex c = support::grid_complex(4);
    std::vector<EdgeSet> images{edges(4, {}), edges(4, {1}), edges(4, {2}), edges(4, {3}), edges(4, {3})};
    const FullMap f = extend_full(CombMap(c, images));
    CHECK(f.vertex_images[2].edges == edges(4, {2, 3}));
    CHECK(f.vertex_images[2].vertices.members() == std::vector<std::size_t>{1, 2, 3});
    CHECK(f.vertex_images[0].edges == edges(4, {1}));

    std::vector<EdgeSet> full(5, c.edges());
    full[0] = edges(4, {});
    const FullMap g = extend_full(CombMap(c, full));
    for (std::size_t v = 0; v <= 4; ++v)
        CHECK(g.vertex_images[v].vertices.size() == 5);
}

TEST_CASE("restriction of a map")
{
    const DataSet d = support::example3();
    const Complex c = build_complex(d);
    const CombMap fk = build_F_K(c, example3_bands());
    const CombMap r = restrict_map(fk, edge_range(10, 3, 8));
    CHECK(r.complex().edge_count() == 6);
    CHECK(r.image(5) == edge_range(10, 3, 8));
    CHECK(r.image(7) == edges(10, {3, 4}));
    CHECK(restrict_map(fk, c.edges()) == fk);

    const CombMap mu = build_F_mu(d, c);
    CHECK_THROWS_AS(restrict_map(mu, edges(10, {1, 2, 3})), EmptyImageError);
}

#include <doctest.h>

#include <cmath>
#include <limits>

#include "morse_bridge/complex.hpp"
#include "morse_bridge/errors.hpp"
#include "support.hpp"

using namespace morse_bridge;
using support::edge_range;
using support::edges;

TEST_CASE("Example 1 grid has ten edges and eleven vertices")
{
    const Complex c = build_complex(support::example1());
    CHECK(c.grid_edge_count() == 10);
    CHECK(c.edge_count() == 10);
    CHECK(c.vertex_count() == 11);
    CHECK(c.x(3) == doctest::Approx(0.3));
}

TEST_CASE("two points give a single edge")
{
    const Complex c = build_complex(support::grid_data({0.3, 0.6}, 1.0));
    CHECK(c.edge_count() == 1);
    CHECK(c.edges_at(0) == std::vector<std::size_t>{1});
    CHECK(c.edges_at(1) == std::vector<std::size_t>{1});
}

TEST_CASE("Example 3 edge 7 is [0.6, 0.7]")
{
    const Complex c = build_complex(support::example3());
    CHECK(c.has_edge(7));
    CHECK(c.x(6) == doctest::Approx(0.6));
    CHECK(c.x(7) == doctest::Approx(0.7));
    const CellSet cl = c.closure(edges(10, {7}));
    CHECK(cl.vertices.members() == std::vector<std::size_t>{6, 7});
}

TEST_CASE("geometric realization merges runs")
{
    const auto ivs = geometric_realization(edges(10, {3, 4, 7, 8}));
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0] == VertexInterval{2, 4});
    CHECK(ivs[1] == VertexInterval{6, 8});
    CHECK(geometric_realization(edge_range(10, 1, 10)) == std::vector<VertexInterval>{{0, 10}});
    CHECK(geometric_realization(edges(10, {5})) == std::vector<VertexInterval>{{4, 5}});
    CHECK(geometric_realization(edges(10, {})).empty());
    CHECK(edges_of({{2, 4}, {6, 8}}, 10) == edges(10, {3, 4, 7, 8}));
}

TEST_CASE("restriction keeps parent indices")
{
    const Complex c = build_complex(support::example3());
    const Complex r = restrict_complex(c, edge_range(10, 3, 8));
    CHECK(r.edge_count() == 6);
    CHECK(r.vertices().members() == std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8});
    CHECK(r.edges_at(2) == std::vector<std::size_t>{3});
    CHECK(r.edges_in({0, 10}) == edge_range(10, 3, 8));
    CHECK(restrict_complex(c, c.edges()) == c);
    CHECK(restrict_complex(c, edges(10, {1})).edge_count() == 1);
    CHECK_THROWS_AS(restrict_complex(c, edges(10, {})), InputError);
    CHECK_THROWS_AS(restrict_complex(r, edges(10, {1})), InputError);
}

TEST_CASE("data sets are validated")
{
    CHECK_THROWS_AS(validate_dataset(support::grid_data({0.5}, 1.0)), InputError);
    CHECK_THROWS_AS(validate_dataset(support::grid_data({0.5, 0.5}, 0.0)), InputError);
    CHECK_THROWS_AS(validate_dataset(support::grid_data({0.5, 1.0}, 1.0)), InputError);
    CHECK_THROWS_AS(validate_dataset(support::grid_data({0.5, std::nan("")}, 1.0)), InputError);
    DataSet d = support::grid_data({0.5, 0.5, 0.5}, 1.0);
    d.points[2].x = d.points[1].x;
    CHECK_THROWS_AS(validate_dataset(d), InputError);
    CHECK_NOTHROW(validate_dataset(support::example2()));
}

TEST_CASE("edge set algebra and order")
{
    const EdgeSet a = edges(5, {1, 2});
    const EdgeSet b = edges(5, {2, 3});
    CHECK((a | b) == edges(5, {1, 2, 3}));
    CHECK((a & b) == edges(5, {2}));
    CHECK((a - b) == edges(5, {1}));
    CHECK(a.intersects(b));
    CHECK(edges(5, {2}).is_subset_of(a));
    CHECK(edges(5, {3}) < a);
    CHECK(a < b);
    CHECK(to_string(a) == "{1,2}");
    CHECK(IndexSetHash{}(a) != IndexSetHash{}(b));
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "morse_bridge/bridge_prob.hpp"
#include "morse_bridge/errors.hpp"
#include "support.hpp"

using namespace morse_bridge;
using namespace morse_bridge::bridge;

namespace {

std::vector<std::pair<BridgeSegment, Band>> segments(const DataSet& d, const std::vector<Band>& bands)
{
    std::vector<std::pair<BridgeSegment, Band>> out;
    for (std::size_t n = 1; n < d.points.size(); ++n)
        out.push_back({{d.points[n - 1].x, d.points[n].x, d.points[n - 1].y, d.points[n].y, d.sigma2},
                       bands[n - 1]});
    return out;
}

}  // namespace

TEST_CASE("pi reduces to the single barrier formula when the lower line is far away")
{
    CHECK(pi_series({1, 1, 1e6, 1e6}) == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));
}

TEST_CASE("pi vanishes when both lines are far away")
{
    CHECK(pi_series({1e6, 1e6, 1e6, 1e6}) == 0.0);
}

TEST_CASE("pi rejects arguments outside its domain")
{
    CHECK_THROWS_AS(pi_series({-1, 1, 1, 1}), DomainError);
    CHECK_THROWS_AS(pi_series({1, 0, 1, 1}), DomainError);
    CHECK_THROWS_AS(pi_series({1, 1, -0.5, 1}), DomainError);
    CHECK_THROWS_AS(pi_series({1, 1, 1, 0}), DomainError);
    CHECK_THROWS_AS(pi_series({1, 1, 1, 1}, 0.0), DomainError);
}

TEST_CASE("pi gives up when the series does not decay within the term cap")
{
    CHECK_THROWS_AS(pi_series({0, 1e-5, 0, 1e-5}), NonConvergenceError);
}

TEST_CASE("a flat upper line is hit almost surely")
{
    CHECK(pi_series({0, 1, 1, 1}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("staying probability of the last Example 3 segment")
{
    const BridgeSegment seg{0.9, 1.0, 0.95, 0.97, 1.0 / 16};
    const double p = band_probability(seg, {0, 1});
    CHECK(std::fabs(p - 0.3812) < 5e-4);
    CHECK(pi_series(band_pi_args(seg, {0, 1})) == doctest::Approx(1 - p).epsilon(1e-15));
}

TEST_CASE("band arguments share one scale")
{
    const BridgeSegment seg{0.0, 0.25, 0.4, 0.6, 4.0};
    const PiArgs a = band_pi_args(seg, {0.0, 1.0});
    const double s = 1.0 / (2.0 * 0.5);
    CHECK(a.a == doctest::Approx((1.0 - 0.6) * s));
    CHECK(a.b == doctest::Approx((1.0 - 0.4) * s));
    CHECK(a.c == doctest::Approx(0.6 * s));
    CHECK(a.d == doctest::Approx(0.4 * s));
}

TEST_CASE("an endpoint on or outside the band gives probability zero")
{
    CHECK(band_probability({0, 1, 1.0, 0.5, 1}, {0, 1}) == 0.0);
    CHECK(band_probability({0, 1, 0.5, 0.0, 1}, {0, 1}) == 0.0);
    CHECK(band_probability({0, 1, 0.5, 2.0, 1}, {0, 1}) == 0.0);
}

TEST_CASE("invalid segments and bands are rejected")
{
    CHECK_THROWS_AS(band_probability({1, 1, 0.5, 0.5, 1}, {0, 1}), DomainError);
    CHECK_THROWS_AS(band_probability({0, 1, 0.5, 0.5, 0}, {0, 1}), DomainError);
    CHECK_THROWS_AS(band_probability({0, 1, 0.5, 0.5, 1}, {1, 0}), DomainError);
}

TEST_CASE("Example 1: product over the ten segments in the band (0, 1)")
{
    const auto items = segments(support::example1(), std::vector<Band>(10, Band{0, 1}));
    CHECK(std::fabs(product_band_probability(items) - 0.8586) < 5e-4);
}

TEST_CASE("Example 2: product with its band table")
{
    std::vector<Band> bands;
    for (int n = 1; n <= 10; ++n)
        bands.push_back(n <= 4 ? Band{0, 0.4} : n >= 7 ? Band{0.6, 1} : Band{0, 1});
    const auto items = segments(support::example2(), bands);
    CHECK(std::fabs(product_band_probability(items) - 0.9989) < 5e-4);
}

TEST_CASE("a zero factor makes the product zero; an empty product is rejected")
{
    std::vector<std::pair<BridgeSegment, Band>> items{{{0, 1, 0.5, 0.5, 1}, {0, 1}},
                                                       {{1, 2, 0.5, 1.5, 1}, {0, 1}}};
    CHECK(product_band_probability(items) == 0.0);
    CHECK_THROWS_AS(product_band_probability({}), DomainError);
}

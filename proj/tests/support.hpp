#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "morse_bridge/comb_map.hpp"
#include "morse_bridge/complex.hpp"
#include "morse_bridge/invset.hpp"

namespace support {

using namespace morse_bridge;

inline const std::string kDataDir = MORSE_BRIDGE_DATA_DIR;

/// Points at x_n = n/N.
inline DataSet grid_data(const std::vector<double>& ys, double sigma2)
{
    DataSet d;
    d.sigma2 = sigma2;
    const double n = static_cast<double>(ys.size() - 1);
    for (std::size_t i = 0; i < ys.size(); ++i)
        d.points.push_back({static_cast<double>(i) / n, ys[i]});
    return d;
}

inline DataSet example1()
{
    return grid_data({.4509, .4999, .4613, .455, .5185, .4987, .5398, .5147, .5397, .5221, .5331}, 1.0);
}

inline DataSet example2()
{
    return grid_data({.2005, .225, .2057, .2025, .2343, .5243, .8449, .8324, .8448, .8361, .8416}, 1.0 / 16);
}

inline DataSet example3()
{
    return grid_data({.03, .07, .6853, .6999, .6884, .501, .255, .3185, .2987, .95, .97}, 1.0 / 16);
}

inline EdgeSet edges(std::size_t grid_edges, std::initializer_list<std::size_t> members)
{
    EdgeSet s(grid_edges + 1);
    for (auto m : members)
        s.insert(m);
    return s;
}

inline EdgeSet edge_range(std::size_t grid_edges, std::size_t first, std::size_t last)
{
    EdgeSet s(grid_edges + 1);
    for (std::size_t m = first; m <= last; ++m)
        s.insert(m);
    return s;
}

inline Complex grid_complex(std::size_t n)
{
    std::vector<double> x;
    for (std::size_t i = 0; i <= n; ++i)
        x.push_back(static_cast<double>(i) / static_cast<double>(n));
    return Complex(x, edge_range(n, 1, n));
}

/// Every edge maps to a random run of edges.
inline CombMap random_interval_map(const Complex& c, std::mt19937_64& rng, std::size_t max_width = 3)
{
    const std::size_t n = c.grid_edge_count();
    std::vector<EdgeSet> images(n + 1, c.empty_edges());
    for (std::size_t e = 1; e <= n; ++e) {
        const std::size_t width = std::uniform_int_distribution<std::size_t>(1, std::min(max_width, n))(rng);
        const std::size_t start = std::uniform_int_distribution<std::size_t>(1, n - width + 1)(rng);
        images[e] = edge_range(n, start, start + width - 1);
    }
    return CombMap(c, images);
}

inline std::vector<EdgeSet> brute_force_invset(const CombMap& map)
{
    const std::size_t n = map.complex().grid_edge_count();
    std::vector<EdgeSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        EdgeSet s(n + 1);
        for (std::size_t e = 1; e <= n; ++e)
            if (mask & (std::size_t{1} << (e - 1)))
                s.insert(e);
        if (member_of_invset(s, map))
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Closure of `seed` under ∩ and ∪, together with ∅ and `top`.
inline std::vector<EdgeSet> close_family(std::vector<EdgeSet> family, const EdgeSet& top)
{
    family.push_back(top - top);
    family.push_back(top);
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t k = family.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (const EdgeSet& s : {family[i] & family[j], family[i] | family[j]})
                    if (std::find(family.begin(), family.end(), s) == family.end()) {
                        family.push_back(s);
                        grew = true;
                    }
    }
    std::sort(family.begin(), family.end());
    return family;
}

/// A random sublattice of Invset⁺(map) generated by a few random members.
inline BlockLattice random_sublattice(const CombMap& map, std::mt19937_64& rng, std::size_t generators = 3)
{
    const BlockLattice all = enumerate_invset(map);
    std::vector<EdgeSet> seed;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t i = 0; i < generators; ++i)
        seed.push_back(all.member(pick(rng)));
    return validate_sublattice(close_family(seed, map.complex().edges()), map);
}

/// y-values strictly inside (0, 1) on N+1 grid points.
inline DataSet random_data(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> y(0.03, 0.97);
    std::uniform_real_distribution<double> s2(0.01, 0.2);
    std::vector<double> ys(n + 1);
    for (auto& v : ys)
        v = y(rng);
    return grid_data(ys, s2(rng));
}

}  // namespace support

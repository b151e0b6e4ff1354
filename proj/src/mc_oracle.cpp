#include "morse_bridge/mc_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <boost/random/normal_distribution.hpp>

#include "morse_bridge/errors.hpp"

namespace morse_bridge::mc {

namespace {

// Crossing terms with exponent beyond this are below double resolution.
constexpr double kNegligibleExponent = 40.0;

constexpr std::uint64_t kChunk = 1024;

struct Scratch {
    std::vector<double> values;
    boost::random::normal_distribution<double> normal;
};

void fill_bridge(const bridge::BridgeSegment& seg, std::size_t grid, Philox4x32& rng, Scratch& s)
{
    s.values.assign(grid + 1, 0.0);
    s.values[0] = seg.y_left;
    s.values[grid] = seg.y_right;
    const double delta = (seg.x_right - seg.x_left) / static_cast<double>(grid);
    for (std::size_t h = grid / 2; h >= 1; h /= 2) {
        const double sd = std::sqrt(seg.sigma2 * static_cast<double>(h) * delta / 2.0);
        for (std::size_t i = h; i < grid; i += 2 * h)
            s.values[i] = 0.5 * (s.values[i - h] + s.values[i + h]) + sd * s.normal(rng);
    }
}

// One path; the acceptance uniform is drawn first so that paths on nested
// grids share it.
bool stays(const bridge::BridgeSegment& seg, const bridge::Band& band, std::size_t grid,
           Philox4x32& rng, Scratch& s)
{
    const double u = rng.uniform();
    auto inside = [&](double y) { return band.alpha < y && y < band.beta; };
    if (!inside(seg.y_left) || !inside(seg.y_right))
        return false;

    s.values.assign(grid + 1, 0.0);
    s.values[0] = seg.y_left;
    s.values[grid] = seg.y_right;
    const double delta = (seg.x_right - seg.x_left) / static_cast<double>(grid);
    for (std::size_t h = grid / 2; h >= 2; h /= 2) {
        const double sd = std::sqrt(seg.sigma2 * static_cast<double>(h) * delta / 2.0);
        for (std::size_t i = h; i < grid; i += 2 * h) {
            const double y = 0.5 * (s.values[i - h] + s.values[i + h]) + sd * s.normal(rng);
            if (!inside(y))
                return false;
            s.values[i] = y;
        }
    }

    // Finest level, fused with the crossing correction of the two
    // subintervals around each new value. The product only decreases, so the
    // path is rejected as soon as it drops to u.
    const double scale = 2.0 / (seg.sigma2 * delta);
    double survival = 1.0;
    auto spare = [&](double a, double b) {
        const double up = scale * (band.beta - a) * (band.beta - b);
        const double lo = scale * (a - band.alpha) * (b - band.alpha);
        if (up < kNegligibleExponent)
            survival *= 1.0 - std::exp(-up);
        if (lo < kNegligibleExponent)
            survival *= 1.0 - std::exp(-lo);
    };
    const double sd = std::sqrt(seg.sigma2 * delta / 2.0);
    for (std::size_t i = 1; i < grid; i += 2) {
        const double left = s.values[i - 1];
        const double right = s.values[i + 1];
        const double y = 0.5 * (left + right) + sd * s.normal(rng);
        if (!inside(y))
            return false;
        s.values[i] = y;
        spare(left, y);
        spare(y, right);
        if (!(u < survival))
            return false;
    }
    return u < survival;
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream, std::uint32_t substream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0u, substream, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)}
{
}

void check(const McConfig& cfg)
{
    if (cfg.samples < 1)
        throw InputError("Monte Carlo needs at least one sample");
    const std::size_t g = cfg.grid_per_segment;
    if (g < 2 || (g & (g - 1)) != 0)
        throw InputError("grid per segment must be a power of two, at least 2");
}

McEstimate make_estimate(std::uint64_t hits, std::uint64_t samples)
{
    McEstimate e;
    e.samples = samples;
    e.hits = hits;
    e.estimate = samples == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples);
    e.standard_error =
        samples == 0 ? 0.0 : std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(samples));
    return e;
}

std::vector<double> sample_bridge(const bridge::BridgeSegment& seg, std::size_t grid, Philox4x32& rng)
{
    bridge::check(seg);
    if (grid < 2 || (grid & (grid - 1)) != 0)
        throw InputError("grid must be a power of two, at least 2");
    Scratch s;
    fill_bridge(seg, grid, rng, s);
    return std::move(s.values);
}

unsigned thread_count(const McConfig& cfg)
{
    unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MORSE_BRIDGE_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap > 0)
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

JointEstimate estimate_joint(std::span<const std::pair<bridge::BridgeSegment, bridge::Band>> items,
                             const McConfig& cfg)
{
    check(cfg);
    if (items.empty())
        throw InputError("nothing to estimate");
    for (const auto& [seg, band] : items) {
        bridge::check(seg);
        bridge::check(band);
    }

    const std::size_t k = items.size();
    const std::uint64_t chunks = (cfg.samples + kChunk - 1) / kChunk;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(thread_count(cfg), chunks));

    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(k + 1, 0));
    auto work = [&](unsigned w) {
        Scratch s;
        auto& mine = counts[w];
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t end = std::min(cfg.samples, (c + 1) * kChunk);
            for (std::uint64_t i = c * kChunk; i < end; ++i) {
                bool all = true;
                for (std::size_t j = 0; j < k; ++j) {
                    Philox4x32 rng(cfg.seed, i, static_cast<std::uint32_t>(j));
                    if (stays(items[j].first, items[j].second, cfg.grid_per_segment, rng, s))
                        ++mine[j];
                    else
                        all = false;
                }
                if (all)
                    ++mine[k];
            }
        }
    };

    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    std::vector<std::uint64_t> total(k + 1, 0);
    for (const auto& c : counts)
        for (std::size_t j = 0; j <= k; ++j)
            total[j] += c[j];

    JointEstimate out;
    for (std::size_t j = 0; j < k; ++j)
        out.segments.push_back(make_estimate(total[j], cfg.samples));
    out.joint = make_estimate(total[k], cfg.samples);
    return out;
}

McEstimate estimate_band_probability(const bridge::BridgeSegment& seg, const bridge::Band& band,
                                     const McConfig& cfg)
{
    const std::pair<bridge::BridgeSegment, bridge::Band> item{seg, band};
    return estimate_joint(std::span(&item, 1), cfg).joint;
}

}  // namespace morse_bridge::mc

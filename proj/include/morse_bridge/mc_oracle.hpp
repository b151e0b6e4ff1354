#pragma once

// Monte Carlo estimates of band probabilities, independent of the series.
//
// A path stays in the band iff every grid value is strictly inside and, on
// every grid subinterval, the single-barrier bridge crossing probabilities of
// both barriers (treated as independent) spare it. Ignoring the interaction
// of the two barriers inside one subinterval biases the estimate upwards by
// an amount that vanishes as the grid is refined.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

#include "morse_bridge/bridge_prob.hpp"

namespace morse_bridge::mc {

/// Philox4x32-10 counter-based generator. The key is the 64-bit seed and
/// the first three counter words name the stream, so every (sample, segment)
/// pair owns an independent, reproducible sequence. Each call returns 64
/// bits; one block of the cipher serves two calls.
class Philox4x32 {
public:
    using result_type = std::uint64_t;
    using Block = std::array<std::uint32_t, 4>;

    Philox4x32(std::uint64_t seed, std::uint64_t stream, std::uint32_t substream = 0) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        if (used_ == kBuffered)
            refill();
        const int i = 2 * used_++;
        return (static_cast<std::uint64_t>(buffer_[i + 1]) << 32) | buffer_[i];
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// The raw cipher.
    static Block encrypt(Block counter, std::array<std::uint32_t, 2> key) noexcept
    {
        std::uint32_t c0 = counter[0], c1 = counter[1], c2 = counter[2], c3 = counter[3];
        std::uint32_t k0 = key[0], k1 = key[1];
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c0;
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c2;
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            c0 = hi1 ^ c1 ^ k0;
            c1 = static_cast<std::uint32_t>(p1);
            c2 = hi0 ^ c3 ^ k1;
            c3 = static_cast<std::uint32_t>(p0);
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return {c0, c1, c2, c3};
    }

private:
    static constexpr int kLanes = 8;
    static constexpr int kBuffered = 2 * kLanes;

    // Encrypts kLanes consecutive counters at once; the rounds of different
    // lanes are independent and overlap in the pipeline.
    void refill() noexcept
    {
#if defined(__SSE2__)
        // Four lanes per vector, two vectors in flight.
        const __m128i m0 = _mm_set1_epi32(static_cast<int>(0xD2511F53u));
        const __m128i m1 = _mm_set1_epi32(static_cast<int>(0xCD9E8D57u));
        auto mulhilo = [](__m128i x, __m128i m, __m128i& hi, __m128i& lo) {
            const __m128i even = _mm_shuffle_epi32(_mm_mul_epu32(x, m), _MM_SHUFFLE(3, 1, 2, 0));
            const __m128i odd =
                _mm_shuffle_epi32(_mm_mul_epu32(_mm_srli_epi64(x, 32), m), _MM_SHUFFLE(3, 1, 2, 0));
            lo = _mm_unpacklo_epi32(even, odd);
            hi = _mm_unpackhi_epi32(even, odd);
        };
        __m128i c[2][4];
        for (int v = 0; v < 2; ++v) {
            const auto base = static_cast<int>(counter_[0] + 4u * static_cast<std::uint32_t>(v));
            c[v][0] = _mm_add_epi32(_mm_set1_epi32(base), _mm_setr_epi32(0, 1, 2, 3));
            for (int w = 1; w < 4; ++w)
                c[v][w] = _mm_set1_epi32(static_cast<int>(counter_[w]));
        }
        std::uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            const __m128i vk0 = _mm_set1_epi32(static_cast<int>(k0));
            const __m128i vk1 = _mm_set1_epi32(static_cast<int>(k1));
            for (int v = 0; v < 2; ++v) {
                __m128i hi0, lo0, hi1, lo1;
                mulhilo(c[v][0], m0, hi0, lo0);
                mulhilo(c[v][2], m1, hi1, lo1);
                c[v][0] = _mm_xor_si128(_mm_xor_si128(hi1, c[v][1]), vk0);
                c[v][1] = lo1;
                c[v][2] = _mm_xor_si128(_mm_xor_si128(hi0, c[v][3]), vk1);
                c[v][3] = lo0;
            }
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        alignas(16) std::uint32_t words[2][4][4];
        for (int v = 0; v < 2; ++v)
            for (int w = 0; w < 4; ++w)
                _mm_store_si128(reinterpret_cast<__m128i*>(words[v][w]), c[v][w]);
        for (int l = 0; l < kLanes; ++l)
            for (int w = 0; w < 4; ++w)
                buffer_[4 * l + w] = words[l / 4][w][l % 4];
#else
        for (int l = 0; l < kLanes; ++l) {
            Block ctr = counter_;
            ctr[0] += static_cast<std::uint32_t>(l);
            const Block out = encrypt(ctr, key_);
            for (int w = 0; w < 4; ++w)
                buffer_[4 * l + w] = out[w];
        }
#endif
        counter_[0] += kLanes;
        used_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    Block counter_;
    std::array<std::uint32_t, 4 * kLanes> buffer_{};
    int used_ = kBuffered;
};

struct McConfig {
    std::uint64_t samples = 100'000;
    std::size_t grid_per_segment = 1024;  ///< power of two, at least 2
    std::uint64_t seed = 0;
    unsigned threads = 0;                 ///< 0: hardware, capped by MORSE_BRIDGE_THREADS
};

/// Throws InputError on an invalid configuration.
void check(const McConfig& cfg);

struct McEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
};

McEstimate make_estimate(std::uint64_t hits, std::uint64_t samples);

/// Bridge values at grid + 1 equally spaced points, endpoints included,
/// by midpoint displacement with the exact conditional variances.
std::vector<double> sample_bridge(const bridge::BridgeSegment& seg, std::size_t grid, Philox4x32& rng);

McEstimate estimate_band_probability(const bridge::BridgeSegment& seg, const bridge::Band& band,
                                     const McConfig& cfg);

/// Per-segment staying frequencies and the frequency with which all
/// segments stay at once, from the same independent bridges.
struct JointEstimate {
    std::vector<McEstimate> segments;
    McEstimate joint;
};

JointEstimate estimate_joint(std::span<const std::pair<bridge::BridgeSegment, bridge::Band>> items,
                             const McConfig& cfg);

/// Worker count: cfg.threads or the hardware concurrency, capped by the
/// MORSE_BRIDGE_THREADS environment variable.
unsigned thread_count(const McConfig& cfg);

}  // namespace morse_bridge::mc

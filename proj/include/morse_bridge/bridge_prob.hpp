#pragma once

// Exact two-sided excursion probabilities for Brownian bridges.

#include <span>
#include <utility>

namespace morse_bridge::bridge {

inline constexpr double kDefaultPiTolerance = 1e-15;
inline constexpr int kMaxPiTerms = 10'000;

/// Arguments of the two-line crossing series. `a`, `c` are slopes and
/// `b`, `d` intercepts of the upper line a*s + b and lower line -(c*s + d).
struct PiArgs {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// A Brownian bridge from (x_left, y_left) to (x_right, y_right) with
/// variance parameter sigma2.
struct BridgeSegment {
    double x_left = 0.0;
    double x_right = 0.0;
    double y_left = 0.0;
    double y_right = 0.0;
    double sigma2 = 0.0;
};

/// Open band (alpha, beta).
struct Band {
    double alpha = 0.0;
    double beta = 0.0;
};

void check(const PiArgs& args);
void check(const BridgeSegment& seg);
void check(const Band& band);

/// Probability that standard Brownian motion started at 0 ever touches the
/// line a*s + b or the line -(c*s + d), s >= 0.
///
/// The series is summed until the four term magnitudes of one index add up
/// to less than `tol`, and the result is clamped to [0, 1].
/// Throws DomainError outside a,c >= 0, b,d > 0 and NonConvergenceError if
/// kMaxPiTerms indices do not suffice.
double pi_series(const PiArgs& args, double tol = kDefaultPiTolerance);

/// The four arguments of `pi_series` for a segment and band, all scaled by
/// the shared factor 1 / (sigma * sqrt(x_right - x_left)).
PiArgs band_pi_args(const BridgeSegment& seg, const Band& band);

/// Probability that the bridge stays strictly inside (alpha, beta) over the
/// whole segment. Zero whenever an endpoint value is not strictly inside.
double band_probability(const BridgeSegment& seg, const Band& band,
                        double tol = kDefaultPiTolerance);

/// Product of band probabilities of independent bridges.
double product_band_probability(std::span<const std::pair<BridgeSegment, Band>> items,
                                double tol = kDefaultPiTolerance);

}  // namespace morse_bridge::bridge

#include "morse_bridge/bridge_prob.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "morse_bridge/errors.hpp"

namespace morse_bridge::bridge {

void check(const PiArgs& args)
{
    if (!(args.a >= 0.0) || !(args.c >= 0.0) || !(args.b > 0.0) || !(args.d > 0.0)) {
        std::ostringstream os;
        os << "pi_series requires a,c >= 0 and b,d > 0; got a=" << args.a << " b=" << args.b
           << " c=" << args.c << " d=" << args.d;
        throw DomainError(os.str());
    }
}

void check(const BridgeSegment& seg)
{
    if (!(seg.x_right > seg.x_left))
        throw DomainError("bridge segment needs x_left < x_right");
    if (!(seg.sigma2 > 0.0))
        throw DomainError("bridge segment needs sigma2 > 0");
    if (!std::isfinite(seg.y_left) || !std::isfinite(seg.y_right))
        throw DomainError("bridge segment endpoint values must be finite");
}

void check(const Band& band)
{
    if (!(band.alpha < band.beta))
        throw DomainError("band needs alpha < beta");
}

double pi_series(const PiArgs& args, double tol)
{
    check(args);
    if (!(tol > 0.0))
        throw DomainError("pi_series tolerance must be positive");

    const double ab = args.a * args.b;
    const double cd = args.c * args.d;
    const double ad = args.a * args.d;
    const double cb = args.c * args.b;

    double sum = 0.0;
    for (int m = 1; m <= kMaxPiTerms; ++m) {
        const double mm = static_cast<double>(m);
        const double m1 = mm - 1.0;
        const double t1 = std::exp(-2.0 * (mm * mm * ab + m1 * m1 * cd + mm * m1 * (ad + cb)));
        const double t2 = std::exp(-2.0 * (m1 * m1 * ab + mm * mm * cd + mm * m1 * (ad + cb)));
        const double t3 = std::exp(-2.0 * (mm * mm * (ab + cd) + mm * m1 * ad + mm * (mm + 1.0) * cb));
        const double t4 = std::exp(-2.0 * (mm * mm * (ab + cd) + mm * (mm + 1.0) * ad + mm * m1 * cb));
        sum += t1 + t2 - t3 - t4;
        if (t1 + t2 + t3 + t4 < tol)
            return std::clamp(sum, 0.0, 1.0);
    }
    std::ostringstream os;
    os << "pi_series did not converge within " << kMaxPiTerms << " terms (a=" << args.a
       << " b=" << args.b << " c=" << args.c << " d=" << args.d << ")";
    throw NonConvergenceError(os.str());
}

PiArgs band_pi_args(const BridgeSegment& seg, const Band& band)
{
    const double scale = 1.0 / (std::sqrt(seg.sigma2) * std::sqrt(seg.x_right - seg.x_left));
    return PiArgs{(band.beta - seg.y_right) * scale, (band.beta - seg.y_left) * scale,
                  (seg.y_right - band.alpha) * scale, (seg.y_left - band.alpha) * scale};
}

double band_probability(const BridgeSegment& seg, const Band& band, double tol)
{
    check(seg);
    check(band);
    const double lo = std::min(seg.y_left, seg.y_right);
    const double hi = std::max(seg.y_left, seg.y_right);
    // Open band: touching a threshold at an endpoint already violates it.
    if (!(band.alpha < lo && hi < band.beta))
        return 0.0;
    return std::clamp(1.0 - pi_series(band_pi_args(seg, band), tol), 0.0, 1.0);
}

double product_band_probability(std::span<const std::pair<BridgeSegment, Band>> items, double tol)
{
    if (items.empty())
        throw DomainError("product_band_probability needs at least one segment");
    double product = 1.0;
    for (const auto& [seg, band] : items)
        product *= band_probability(seg, band, tol);
    return product;
}

}  // namespace morse_bridge::bridge

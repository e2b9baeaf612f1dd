#include "superray/poles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace superray {

double pole_asymptotic(double a, double v) {
    if (!(a > 0.0)) throw std::domain_error("pole_asymptotic: a must be > 0");
    if (!(v >= 0.0)) throw std::domain_error("pole_asymptotic: v must be >= 0");
    return 0.5 * a * v * v;
}

namespace {

constexpr double kGridRatio = 1.7782794100389228; // 10^(1/4)
constexpr double kSmallestOffset = 1e-300;

} // namespace

BracketSearch bracket_pole(const InterfaceScattering& scatter) {
    if (scatter.v() == 0.0) {
        return {std::nullopt, "front at rest (v = 0): f = sqrt(eps1) + sqrt(eps2) > 0 "
                              "throughout the band"};
    }

    const double x_hi = scatter.delta_scale();
    double x_lo = std::min(1e-20, pole_asymptotic(scatter.a(), scatter.v()) / 10.0);

    // The singular term makes f -> -inf as x -> 0+, but for extreme
    // parameters the seed may start on the positive side; walk it down.
    while (f_denominator_at_x(scatter, x_lo) >= 0.0) {
        x_lo *= 1e-4;
        if (x_lo < kSmallestOffset) {
            return {std::nullopt, "no sign change of f found down to x = 1e-300"};
        }
    }

    if (f_denominator_at_x(scatter, x_hi) <= 0.0) {
        return {std::nullopt, "no sign change of f in (0, delta]: f is still negative "
                              "at the edge of the weak-shock band"};
    }

    // Geometric sweep towards x_hi; the first non-negative sample closes the
    // bracket (f is strictly increasing here for paper-regime parameters).
    double lo = x_lo;
    double hi = std::min(lo * kGridRatio, x_hi);
    while (true) {
        const double f_hi = f_denominator_at_x(scatter, hi);
        if (f_hi > 0.0) return {PoleBracket{lo, hi}, {}};
        if (f_hi == 0.0) {
            // Exact grid hit: widen one step on each side; monotonicity
            // keeps the signs strict.
            return {PoleBracket{hi / kGridRatio, std::min(hi * kGridRatio, x_hi)}, {}};
        }
        lo = hi;
        if (hi >= x_hi) break;
        hi = std::min(hi * kGridRatio, x_hi);
    }
    return {std::nullopt, "no sign change of f in (0, delta]"};
}

PoleSearch find_pole(const InterfaceScattering& scatter, double rel_tol) {
    if (!(rel_tol >= 1e-15)) {
        throw std::domain_error("find_pole: rel_tol must be >= 1e-15");
    }

    BracketSearch search = bracket_pole(scatter);
    if (!search.found()) return {std::nullopt, search.no_pole_reason};
    const PoleBracket bracket = *search.bracket;

    double lo = bracket.x_lo;
    double hi = bracket.x_hi;
    int iterations = 0;
    while (hi - lo > rel_tol * std::midpoint(lo, hi) && iterations < 2000) {
        const double mid = std::midpoint(lo, hi);
        if (mid <= lo || mid >= hi) break; // bracket at floating-point resolution
        (f_denominator_at_x(scatter, mid) < 0.0 ? lo : hi) = mid;
        ++iterations;
    }

    const double x_star = std::midpoint(lo, hi);
    PoleRecord record{
        scatter.omega_tilde() * (1.0 + x_star),
        x_star,
        bracket,
        f_denominator_at_x(scatter, x_star),
        iterations,
        pole_asymptotic(scatter.a(), scatter.v()),
    };
    return {record, {}};
}

} // namespace superray

#include "superray/validation.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "superray/poles.hpp"
#include "superray/scattering.hpp"
#include "superray/sweep.hpp"

namespace superray {

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

InterfaceScattering make_interface(bool exact, double a, double delta, double v) {
    const WeakShockPair pair(a, 1.0, delta);
    if (exact) return InterfaceScattering(PlasmaPair{pair.exact_side1(), pair.exact_side2()}, v);
    return InterfaceScattering(pair, v);
}

std::string fmt(double v) { return format_double(v); }

} // namespace

CheckResult check_fresnel_reduction(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> a_dist(0.5, 2.0);

    double worst_r = 0.0;
    double worst_energy = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double a = a_dist(rng);
        const double delta = log_uniform(rng, 1e-4, 1e-2);
        const double x = log_uniform(rng, 1e-3, 1.0);
        const InterfaceScattering sc = make_interface(i % 2 == 0, a, delta, 0.0);

        const double expected = fresnel_amplitude(sc.eps1_at_x(x), sc.eps2_at_x(x));
        for (const auto& sol : {reflection_full_at_x(sc, x), reflection_first_order_at_x(sc, x),
                                boundary_solve_oracle_at_x(sc, x)}) {
            worst_r = std::max(worst_r, std::abs(sol.r - expected));
            worst_r = std::max(worst_r, std::abs(sol.t - (1.0 + sol.r)));
            const double ratio = std::sqrt(sc.eps2_at_x(x)) / std::sqrt(sc.eps1_at_x(x));
            const double energy = sol.r * sol.r + ratio * sol.t * sol.t;
            worst_energy = std::max(worst_energy, std::abs(energy - 1.0));
        }
    }

    const bool ok = worst_r <= 1e-12 && worst_energy <= 1e-10;
    std::ostringstream detail;
    detail << samples << " random media: max |r - fresnel| = " << fmt(worst_r)
           << " (tol 1e-12), max |R + (s2/s1) t^2 - 1| = " << fmt(worst_energy)
           << " (tol 1e-10)";
    return {"fresnel_reduction", ok, detail.str()};
}

CheckResult check_oracle_equivalence(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> a_dist(0.5, 2.0);

    double worst = 0.0;
    int accepted = 0;
    while (accepted < samples) {
        const double a = a_dist(rng);
        const double delta = log_uniform(rng, 1e-4, 1e-2);
        const double v = log_uniform(rng, 1e-6, 1e-3);
        const double x = log_uniform(rng, 1e-3, 0.5);
        const InterfaceScattering sc = make_interface(accepted % 2 == 0, a, delta, v);

        // Keep the shifted frequencies comfortably inside the band.
        const double s1 = std::sqrt(sc.eps1_at_x(x));
        const double s2 = std::sqrt(sc.eps2_at_x(x));
        const double x_2 = x - v * (s1 - s2) * (1.0 + x);
        const double x_r = x - 2.0 * v * s1 * (1.0 + x);
        if (x_2 < 0.2 * x || sc.eps1_at_x(x_r) <= 0.0) continue;

        const ReflectionSolution full = reflection_full_at_x(sc, x);
        const ReflectionSolution oracle = boundary_solve_oracle_at_x(sc, x);
        worst = std::max(worst,
                         std::abs(full.r - oracle.r) / std::max(1.0, std::abs(full.r)));
        ++accepted;
    }

    const bool ok = worst <= 1e-10;
    std::ostringstream detail;
    detail << samples << " random points, v <= 1e-3: max relative |r_full - r_oracle| = "
           << fmt(worst) << " (tol 1e-10)";
    return {"oracle_equivalence", ok, detail.str()};
}

CheckResult check_first_order_scaling() {
    const WeakShockPair pair(1.0, 1.0, 1e-3);
    const double x = 0.05;
    const int n = 13;

    double sum_lx = 0.0, sum_ly = 0.0, sum_lxlx = 0.0, sum_lxly = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = 1e-6 * std::pow(1e3, static_cast<double>(i) / (n - 1));
        const InterfaceScattering sc(pair, v);
        const double diff =
            std::abs(reflection_full_at_x(sc, x).r - reflection_first_order_at_x(sc, x).r);
        const double lx = std::log(v);
        const double ly = std::log(diff);
        sum_lx += lx;
        sum_ly += ly;
        sum_lxlx += lx * lx;
        sum_lxly += lx * ly;
    }
    const double slope = (n * sum_lxly - sum_lx * sum_ly) / (n * sum_lxlx - sum_lx * sum_lx);

    const bool ok = std::abs(slope - 2.0) <= 0.1;
    std::ostringstream detail;
    detail << "log-log slope of |r_full - r_first_order| over v in [1e-6, 1e-3]: "
           << fmt(slope) << " (expected 2 +- 0.1)";
    return {"first_order_scaling", ok, detail.str()};
}

CheckResult check_root_residuals() {
    bool ok = true;
    double worst_offset = 0.0;
    double worst_ratio_lo = 1.0, worst_ratio_hi = 1.0;
    double worst_residual_margin = 0.0;

    for (double a : {1.0, 2.0}) {
        for (double delta : {1e-4, 1e-3, 1e-2}) {
            const double v = 1e-5;
            const InterfaceScattering sc(WeakShockPair(a, 1.0, delta), v);
            const PoleSearch search = find_pole(sc, 1e-12);
            if (!search.found()) {
                return {"root_residuals", false,
                        "no pole found at a=" + fmt(a) + ", delta=" + fmt(delta)};
            }
            const PoleRecord& rec = *search.record;
            const double ratio = rec.x_offset / rec.asymptotic_prediction;
            const double residual_bound = 1e-6 * std::sqrt(2.0 * a * delta);
            ok = ok && rec.x_offset < 1e-8 && ratio >= 0.5 && ratio <= 2.0 &&
                 std::abs(rec.f_residual) <= residual_bound;
            worst_offset = std::max(worst_offset, rec.x_offset);
            worst_ratio_lo = std::min(worst_ratio_lo, ratio);
            worst_ratio_hi = std::max(worst_ratio_hi, ratio);
            worst_residual_margin =
                std::max(worst_residual_margin, std::abs(rec.f_residual) / residual_bound);
        }
    }

    std::ostringstream detail;
    detail << "grid v=1e-5, a in {1,2}, delta in {1e-4,1e-3,1e-2}: max x* = "
           << fmt(worst_offset) << " (< 1e-8), x*/(a v^2/2) in [" << fmt(worst_ratio_lo) << ", "
           << fmt(worst_ratio_hi) << "] (within [0.5, 2]), max |f(omega*)| / bound = "
           << fmt(worst_residual_margin) << " (<= 1)";
    return {"root_residuals", ok, detail.str()};
}

std::vector<CheckResult> run_validation_suite() {
    return {check_fresnel_reduction(), check_oracle_equivalence(), check_first_order_scaling(),
            check_root_residuals()};
}

} // namespace superray

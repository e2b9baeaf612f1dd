#include "superray/scattering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "superray/errors.hpp"

namespace superray {

namespace {

constexpr double kMaxFrontSpeed = 0.01; // first-order O(v/c) envelope

double checked_sqrt(double eps, const char* what) {
    if (eps < 0.0) throw EvanescentBandError(what);
    return std::sqrt(eps);
}

} // namespace

InterfaceScattering::InterfaceScattering(const WeakShockPair& pair, double v)
    : media_(pair), v_(v), omega_tilde_(pair.omega_tilde), a_(pair.a),
      delta_scale_(pair.delta), eps1_at_tilde_(2.0 * pair.a * pair.delta) {
    if (!(v >= 0.0) || v > kMaxFrontSpeed) {
        throw std::domain_error("InterfaceScattering: v must lie in [0, 0.01]");
    }
}

InterfaceScattering::InterfaceScattering(const PlasmaPair& media, double v)
    : media_(media), v_(v), omega_tilde_(media.side2.omega_tilde()),
      a_(media.side2.a) {
    if (!(v >= 0.0) || v > kMaxFrontSpeed) {
        throw std::domain_error("InterfaceScattering: v must lie in [0, 0.01]");
    }
    eps1_at_tilde_ = media.side1.epsilon(omega_tilde_);
    if (!(eps1_at_tilde_ > 0.0)) {
        throw std::domain_error(
            "InterfaceScattering: side 1 must be propagating at side 2's band edge");
    }
    delta_scale_ = eps1_at_tilde_ / (2.0 * a_);
}

bool InterfaceScattering::linearized() const {
    return std::holds_alternative<WeakShockPair>(media_);
}

const WeakShockPair* InterfaceScattering::weak_pair() const {
    return std::get_if<WeakShockPair>(&media_);
}

double InterfaceScattering::to_x(double omega) const {
    if (!(omega > 0.0)) throw std::domain_error("InterfaceScattering: omega must be > 0");
    return omega / omega_tilde_ - 1.0;
}

double InterfaceScattering::eps1_at_x(double x) const {
    if (const auto* pair = std::get_if<WeakShockPair>(&media_)) {
        return pair->epsilon1_at_x(x);
    }
    // a1 - (w01/w)^2 regrouped around the side-2 band edge so that small x
    // does not cancel: [a1 (2x + x^2) + eps1(omega_tilde)] / (1+x)^2.
    const auto& m = std::get<PlasmaPair>(media_).side1;
    const double u = 1.0 + x;
    return (m.a * x * (2.0 + x) + eps1_at_tilde_) / (u * u);
}

double InterfaceScattering::eps2_at_x(double x) const {
    if (const auto* pair = std::get_if<WeakShockPair>(&media_)) {
        return pair->epsilon2_at_x(x);
    }
    return std::get<PlasmaPair>(media_).side2.epsilon_at_x(x);
}

double InterfaceScattering::omega_deps1_at_x(double x) const {
    if (const auto* pair = std::get_if<WeakShockPair>(&media_)) {
        return 2.0 * pair->a * (1.0 + x);
    }
    const auto& m = std::get<PlasmaPair>(media_).side1;
    const double q = m.omega0 / (omega_tilde_ * (1.0 + x));
    return 2.0 * q * q;
}

double InterfaceScattering::omega_deps2_at_x(double x) const {
    if (const auto* pair = std::get_if<WeakShockPair>(&media_)) {
        return 2.0 * pair->a * (1.0 + x);
    }
    const double u = 1.0 + x;
    return 2.0 * a_ / (u * u);
}

void InterfaceScattering::set_denominator_floor(double floor) {
    if (!(floor >= 0.0)) throw std::domain_error("denominator floor must be >= 0");
    denominator_floor_ = floor;
}

double fresnel_amplitude(double eps1, double eps2) {
    const double s1 = checked_sqrt(eps1, "fresnel_amplitude: eps1 < 0");
    const double s2 = checked_sqrt(eps2, "fresnel_amplitude: eps2 < 0");
    return (s1 - s2) / (s1 + s2);
}

namespace {

void require_in_band(double x, const char* who) {
    if (!(x > 0.0)) {
        throw std::domain_error(std::string(who) +
                                ": omega must exceed the band edge omega_tilde (x > 0)");
    }
}

DopplerTriple triple_at_x(const InterfaceScattering& sc, double x, double s1, double s2,
                          double* x_r, double* x_2) {
    // Eq. shifts recast in the offset variable: x_r = x - 2 v s1 (1+x), etc.
    const double wt = sc.omega_tilde();
    *x_r = x - 2.0 * sc.v() * s1 * (1.0 + x);
    *x_2 = x - sc.v() * (s1 - s2) * (1.0 + x);
    return DopplerTriple{wt * (1.0 + x), wt * (1.0 + *x_r), wt * (1.0 + *x_2)};
}

ReflectionSolution make_solution(const InterfaceScattering& sc, double numerator,
                                 double denominator, double scale,
                                 const DopplerTriple& triple, AmplitudeMethod method) {
    const bool near_pole = std::abs(denominator) < sc.denominator_floor() * scale;
    const double r = numerator / denominator;
    return ReflectionSolution{r, 1.0 + r, triple, denominator, method, near_pole};
}

} // namespace

ReflectionSolution reflection_full_at_x(const InterfaceScattering& sc, double x) {
    require_in_band(x, "reflection_full");
    const double e1 = sc.eps1_at_x(x);
    const double e2 = sc.eps2_at_x(x);
    const double s1 = checked_sqrt(e1, "reflection_full: eps1(omega) < 0");
    const double s2 = checked_sqrt(e2, "reflection_full: eps2(omega) < 0");

    double x_r, x_2;
    const DopplerTriple triple = triple_at_x(sc, x, s1, s2, &x_r, &x_2);

    const double e2_t = sc.eps2_at_x(x_2);
    const double s2_t = checked_sqrt(
        e2_t, "reflection_full: transmitted frequency below the band edge (evanescent)");
    const double e1_r = sc.eps1_at_x(x_r);
    const double s1_r = checked_sqrt(
        e1_r, "reflection_full: reflected frequency below side 1's band edge (evanescent)");

    const double v = sc.v();
    const double numerator = s1 - s2_t + v * (e2_t - e1);
    const double denominator = s2_t + s1_r - v * (e2_t - e1_r);
    return make_solution(sc, numerator, denominator, s1 + s2, triple, AmplitudeMethod::full);
}

ReflectionSolution reflection_first_order_at_x(const InterfaceScattering& sc, double x) {
    require_in_band(x, "reflection_first_order");
    const double e1 = sc.eps1_at_x(x);
    const double e2 = sc.eps2_at_x(x);
    const double s1 = checked_sqrt(e1, "reflection_first_order: eps1(omega) < 0");
    const double s2 = checked_sqrt(e2, "reflection_first_order: eps2(omega) < 0");

    double x_r, x_2;
    const DopplerTriple triple = triple_at_x(sc, x, s1, s2, &x_r, &x_2);

    const double v = sc.v();
    const double wde2 = sc.omega_deps2_at_x(x);
    const double slope_term = (s1 - s2) / (2.0 * s2) * wde2;
    const double numerator = s1 - s2 + v * (e2 - e1 + slope_term);
    const double denominator = f_denominator_at_x(sc, x);
    return make_solution(sc, numerator, denominator, s1 + s2, triple,
                         AmplitudeMethod::first_order);
}

ReflectionSolution boundary_solve_oracle_at_x(const InterfaceScattering& sc, double x) {
    require_in_band(x, "boundary_solve_oracle");
    const double e1 = sc.eps1_at_x(x);
    const double e2 = sc.eps2_at_x(x);
    const double s1 = checked_sqrt(e1, "boundary_solve_oracle: eps1(omega) < 0");
    const double s2 = checked_sqrt(e2, "boundary_solve_oracle: eps2(omega) < 0");

    double x_r, x_2;
    const DopplerTriple triple = triple_at_x(sc, x, s1, s2, &x_r, &x_2);

    const double e2_t = sc.eps2_at_x(x_2);
    const double s2_t = checked_sqrt(
        e2_t, "boundary_solve_oracle: transmitted frequency below the band edge (evanescent)");
    const double e1_r = sc.eps1_at_x(x_r);
    const double s1_r = checked_sqrt(
        e1_r, "boundary_solve_oracle: reflected frequency below side 1's band edge (evanescent)");

    // Unknowns (E1, E2), incident amplitude 1.
    //   row 0: tangential E continuity,  -E1 + E2 = 1
    //   row 1: n x dH = -v d(eps E_t), with H from the dispersion relation
    //          at each mode's own frequency:
    //          (s1_r + v e1_r) E1 + (s2_t - v e2_t) E2 = s1 - v e1
    const double v = sc.v();
    double m[2][2] = {{-1.0, 1.0}, {s1_r + v * e1_r, s2_t - v * e2_t}};
    double b[2] = {1.0, s1 - v * e1};

    // 2x2 Gaussian elimination with partial pivoting.
    int p = std::abs(m[0][0]) >= std::abs(m[1][0]) ? 0 : 1;
    const int q = 1 - p;
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double factor = m[q][0] / m[p][0];
    const double a11 = m[q][1] - factor * m[p][1];
    const double rhs = b[q] - factor * b[p];
    const double E2 = rhs / a11;
    const double E1 = (b[p] - m[p][1] * E2) / m[p][0];

    ReflectionSolution sol{E1, E2, triple, -det, AmplitudeMethod::oracle, false};
    sol.near_pole = std::abs(det) < sc.denominator_floor() * (s1 + s2);
    return sol;
}

double f_denominator_at_x(const InterfaceScattering& sc, double x) {
    require_in_band(x, "f_denominator");
    const double e1 = sc.eps1_at_x(x);
    const double e2 = sc.eps2_at_x(x);
    const double s1 = checked_sqrt(e1, "f_denominator: eps1(omega) < 0");
    const double s2 = std::sqrt(e2); // e2 > 0 for x > 0 in both media kinds

    const double wde1 = sc.omega_deps1_at_x(x);
    const double wde2 = sc.omega_deps2_at_x(x);
    return s2 + s1 - sc.v() * (e2 - e1 + (s1 - s2) / (2.0 * s2) * wde2 + wde1);
}

ReflectionSolution reflection_full(const InterfaceScattering& sc, double omega) {
    return reflection_full_at_x(sc, sc.to_x(omega));
}

ReflectionSolution reflection_first_order(const InterfaceScattering& sc, double omega) {
    return reflection_first_order_at_x(sc, sc.to_x(omega));
}

ReflectionSolution boundary_solve_oracle(const InterfaceScattering& sc, double omega) {
    return boundary_solve_oracle_at_x(sc, sc.to_x(omega));
}

double f_denominator(const InterfaceScattering& sc, double omega) {
    return f_denominator_at_x(sc, sc.to_x(omega));
}

} // namespace superray

#include "superray/media.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace superray {

namespace {

void require_positive_omega(double omega, const char* who) {
    if (!(omega > 0.0)) {
        throw std::domain_error(std::string(who) + ": omega must be > 0");
    }
}

} // namespace

PlasmaBandMedium::PlasmaBandMedium(double a_, double omega0_) : a(a_), omega0(omega0_) {
    if (!(a > 0.0)) throw std::domain_error("PlasmaBandMedium: a must be > 0");
    if (!(omega0 > 0.0)) throw std::domain_error("PlasmaBandMedium: omega0 must be > 0");
}

double PlasmaBandMedium::omega_tilde() const {
    return omega0 / std::sqrt(a);
}

double PlasmaBandMedium::epsilon(double omega) const {
    require_positive_omega(omega, "PlasmaBandMedium::epsilon");
    const double q = omega0 / omega;
    return a - q * q;
}

double PlasmaBandMedium::epsilon_at_x(double x) const {
    // a - a / (1+x)^2 = a (2x + x^2) / (1+x)^2, free of the cancellation
    // that a direct a - (omega0/omega)^2 suffers for |x| << 1.
    if (!(x > -1.0)) {
        throw std::domain_error("PlasmaBandMedium::epsilon_at_x: x must be > -1");
    }
    const double u = 1.0 + x;
    return a * x * (2.0 + x) / (u * u);
}

double PlasmaBandMedium::depsilon_domega(double omega) const {
    require_positive_omega(omega, "PlasmaBandMedium::depsilon_domega");
    return 2.0 * omega0 * omega0 / (omega * omega * omega);
}

WeakShockPair::WeakShockPair(double a_, double omega_tilde_, double delta_)
    : a(a_), omega_tilde(omega_tilde_), delta(delta_) {
    if (!(a > 0.0)) throw std::domain_error("WeakShockPair: a must be > 0");
    if (!(omega_tilde > 0.0)) throw std::domain_error("WeakShockPair: omega_tilde must be > 0");
    if (!(delta > 0.0)) throw std::domain_error("WeakShockPair: delta must be > 0");
}

double WeakShockPair::epsilon1(double omega) const {
    require_positive_omega(omega, "WeakShockPair::epsilon1");
    return epsilon1_at_x(omega / omega_tilde - 1.0);
}

double WeakShockPair::epsilon2(double omega) const {
    require_positive_omega(omega, "WeakShockPair::epsilon2");
    return epsilon2_at_x(omega / omega_tilde - 1.0);
}

double WeakShockPair::epsilon1_at_x(double x) const {
    return 2.0 * a * (delta + x);
}

double WeakShockPair::epsilon2_at_x(double x) const {
    return 2.0 * a * x;
}

double WeakShockPair::depsilon_domega() const {
    return 2.0 * a / omega_tilde;
}

PlasmaBandMedium WeakShockPair::exact_side1() const {
    // Plasma frequency reduced so that eps(omega_tilde) = 2 a delta; the
    // expansion then matches eps1 up to the dropped delta*x cross term.
    if (!(delta < 0.5)) {
        throw std::domain_error("WeakShockPair::exact_side1: delta must be < 0.5");
    }
    return PlasmaBandMedium(a, omega_tilde * std::sqrt(a * (1.0 - 2.0 * delta)));
}

PlasmaBandMedium WeakShockPair::exact_side2() const {
    return PlasmaBandMedium(a, omega_tilde * std::sqrt(a));
}

std::pair<double, double> epsilon_pair_linearized(const WeakShockPair& pair, double omega) {
    return {pair.epsilon1(omega), pair.epsilon2(omega)};
}

} // namespace superray

#pragma once

#include <utility>

namespace superray {

/// Transparency-band permittivity of a gas with no absorption lines,
///
///     eps(omega) = a - (omega0 / omega)^2,
///
/// where omega0 is the plasma frequency set by the electron density and a is
/// the dimensionless background constant. eps crosses zero at
/// omega_tilde = omega0 / sqrt(a); below that the band is evanescent.
///
/// Frequencies are in whatever unit omega0 carries; the model is otherwise
/// dimensionless.
struct PlasmaBandMedium {
    double a;
    double omega0;

    PlasmaBandMedium(double a, double omega0);

    double omega_tilde() const;

    /// eps(omega). omega <= 0 is a domain error; negative return values
    /// (evanescent band) are allowed.
    double epsilon(double omega) const;

    /// eps at omega = omega_tilde * (1 + x), evaluated cancellation-free in
    /// the band offset x. epsilon_at_x(0) is exactly 0.
    double epsilon_at_x(double x) const;

    /// d eps / d omega = 2 omega0^2 / omega^3.
    double depsilon_domega(double omega) const;
};

/// Linearized permittivity pair across a weak shock, in terms of the band
/// offset x = omega/omega_tilde - 1 and the relative density jump
/// delta = dn/n:
///
///     eps2 = 2 a x              (side 2: zero crossing at omega_tilde)
///     eps1 = 2 a delta + 2 a x  (side 1: carries the density jump)
///
/// Cross terms of order delta * x are dropped. Side 1 is the side of
/// incidence. The weak-shock regime is delta <= 0.1; larger values are
/// accepted but flagged by weak_regime().
struct WeakShockPair {
    double a;
    double omega_tilde;
    double delta;

    WeakShockPair(double a, double omega_tilde, double delta);

    double epsilon1(double omega) const;
    double epsilon2(double omega) const;
    double epsilon1_at_x(double x) const;
    double epsilon2_at_x(double x) const;

    /// Both sides have the constant slope 2 a / omega_tilde.
    double depsilon_domega() const;

    /// Exact band-model media whose first-order expansions reproduce this
    /// pair; used to quantify the linearization error.
    PlasmaBandMedium exact_side1() const;
    PlasmaBandMedium exact_side2() const;

    bool weak_regime(double delta_max = 0.1) const { return delta <= delta_max; }
};

/// (eps1, eps2) of the linearized pair at omega. omega <= 0 is a domain
/// error; values below omega_tilde come out negative (see WeakShockPair).
std::pair<double, double> epsilon_pair_linearized(const WeakShockPair& pair, double omega);

} // namespace superray

#pragma once

#include <variant>

#include "superray/kinematics.hpp"
#include "superray/media.hpp"

namespace superray {

/// Two exact band-model media forming an interface. side2's zero crossing
/// defines the band edge omega_tilde used for offsets; side1 must still be
/// propagating there (eps1(omega_tilde) > 0).
struct PlasmaPair {
    PlasmaBandMedium side1;
    PlasmaBandMedium side2;
};

/// A plane density discontinuity moving to the right with speed v (fraction
/// of c), separating medium 1 (incidence side) from medium 2. Normal
/// incidence only. The media are either the linearized weak-shock pair or
/// two exact band-model media.
///
/// All frequency arguments can be given as the band offset x =
/// omega/omega_tilde - 1; the *_at_x entry points avoid the precision loss
/// of forming x from omega when x is many orders below 1.
class InterfaceScattering {
public:
    InterfaceScattering(const WeakShockPair& pair, double v);
    InterfaceScattering(const PlasmaPair& media, double v);

    double v() const { return v_; }
    double omega_tilde() const { return omega_tilde_; }

    /// Background constant of side 2 (the side whose permittivity vanishes
    /// at omega_tilde); sets the scale of the pole asymptotics.
    double a() const { return a_; }

    /// eps1(omega_tilde) / (2 a): equals delta for the linearized pair and
    /// plays the same role for exact media. Bounds the pole search.
    double delta_scale() const { return delta_scale_; }

    bool linearized() const;
    const WeakShockPair* weak_pair() const;

    double eps1_at_x(double x) const;
    double eps2_at_x(double x) const;
    double eps1(double omega) const { return eps1_at_x(to_x(omega)); }
    double eps2(double omega) const { return eps2_at_x(to_x(omega)); }

    /// omega * d(eps)/d(omega) at omega = omega_tilde (1 + x).
    double omega_deps1_at_x(double x) const;
    double omega_deps2_at_x(double x) const;

    /// Threshold, relative to the sqrt(eps) scale, below which a denominator
    /// counts as "at the pole" rather than merely near it.
    double denominator_floor() const { return denominator_floor_; }
    void set_denominator_floor(double floor);

    double to_x(double omega) const;

private:
    std::variant<WeakShockPair, PlasmaPair> media_;
    double v_;
    double omega_tilde_;
    double a_;
    double delta_scale_;
    double eps1_at_tilde_;
    double denominator_floor_ = 1e-30;
};

enum class AmplitudeMethod { full, first_order, oracle };

/// Reflection/transmission amplitudes r = E1/E0 and t = E2/E0 at the moving
/// front, with t = 1 + r from tangential-field continuity. near_pole is a
/// signal, not a failure: the denominator magnitude fell under the floor and
/// r may be huge or infinite.
struct ReflectionSolution {
    double r;
    double t;
    DopplerTriple triple;
    double denominator;
    AmplitudeMethod method;
    bool near_pole;
};

/// Reflection amplitude with the shifted-frequency permittivities kept in
/// full:
///
///         sqrt(eps1(w)) - sqrt(eps2(w2)) + v (eps2(w2) - eps1(w))
///     r = ------------------------------------------------------- ,
///         sqrt(eps2(w2)) + sqrt(eps1(wr)) - v (eps2(w2) - eps1(wr))
///
/// where (w, wr, w2) is the first-order Doppler triple. Raises
/// EvanescentBandError when a shifted frequency leaves the transparent band
/// (for band-edge media this happens for all x below ~v sqrt(eps1), which
/// covers the pole of the expanded amplitude).
ReflectionSolution reflection_full(const InterfaceScattering& scatter, double omega);
ReflectionSolution reflection_full_at_x(const InterfaceScattering& scatter, double x);

/// Same amplitude expanded to first order in v, every permittivity at the
/// unshifted omega:
///
///         sqrt(eps1) - sqrt(eps2) + v (eps2 - eps1 + g w deps2/dw)
///     r = -------------------------------------------------------- ,
///         f(omega)
///
/// with g = (sqrt(eps1) - sqrt(eps2)) / (2 sqrt(eps2)). The poles of this
/// form are the superradiant emission frequencies.
ReflectionSolution reflection_first_order(const InterfaceScattering& scatter, double omega);
ReflectionSolution reflection_first_order_at_x(const InterfaceScattering& scatter, double x);

/// Independent route: assembles the two jump conditions at the front
/// (tangential E continuous; n x dH = -v d(eps E_t)) as a 2x2 linear system
/// in (E1, E2) with each mode's H eliminated through the dispersion relation
/// at its own shifted frequency, and solves it directly.
ReflectionSolution boundary_solve_oracle(const InterfaceScattering& scatter, double omega);
ReflectionSolution boundary_solve_oracle_at_x(const InterfaceScattering& scatter, double x);

/// Denominator of the first-order amplitude,
///
///     f = sqrt(eps2) + sqrt(eps1)
///         - v (eps2 - eps1 + g w deps2/dw + w deps1/dw),
///
/// singular (-> -inf) at the band edge for v > 0 and strictly increasing
/// just above it; its root marks stimulated emission. omega <= omega_tilde
/// (x <= 0) is a domain error.
double f_denominator(const InterfaceScattering& scatter, double omega);
double f_denominator_at_x(const InterfaceScattering& scatter, double x);

/// Static Fresnel amplitude (sqrt(eps1) - sqrt(eps2)) / (sqrt(eps1) +
/// sqrt(eps2)), the v = 0 limit of every method here.
double fresnel_amplitude(double eps1, double eps2);

} // namespace superray

#pragma once

#include "superray/media.hpp"

namespace superray {

enum class Direction { right, left };

/// Drag coefficient alpha = (eps - 1) v entering the moving-medium
/// dispersion relation. v is the medium speed as a fraction of c.
double alpha(double epsilon, double v);

/// Signed wavenumber of a plane wave in a medium moving with speed v along
/// the propagation axis, to first order in v:
///
///     |k| = (sqrt(eps) + alpha) omega   for right-movers,
///     |k| = (sqrt(eps) - alpha) omega   for left-movers,
///
/// with alpha = (eps - 1) v. The sign of the result encodes the direction.
/// eps < 0 raises EvanescentBandError.
double wavenumber(double epsilon, double omega, double v, Direction direction);

/// One propagating mode. The first-order moving-medium relations are valid
/// for v well below c; first_order_valid() flags speeds past the threshold.
struct WaveMode {
    double omega;
    double k; // signed
    Direction direction;
    double epsilon;
    double v;

    static WaveMode make(double epsilon, double omega, double v, Direction direction);

    bool first_order_valid(double v_threshold = 0.01) const {
        return v >= 0.0 && v < v_threshold;
    }
};

/// Incident, reflected and transmitted frequencies at the moving front.
/// They satisfy omega - k v = omega_tilde_r + k_r v = omega_2 - k_2 v with
/// each mode's wavenumber taken in its own medium.
struct DopplerTriple {
    double omega;          // incident
    double omega_tilde_r;  // reflected
    double omega_2;        // transmitted
};

/// First-order shifted frequencies,
///
///     omega_tilde_r = omega [1 - 2 v sqrt(eps1)],
///     omega_2       = omega [1 - v (sqrt(eps1) - sqrt(eps2))],
///
/// with both permittivities evaluated at the incident omega.
DopplerTriple doppler_first_order(double omega, double v, double eps1, double eps2);

/// Solves the unexpanded conservation law omega - k v = omega_tilde_r + k_r v
/// = omega_2 - k_2 v by fixed-point iteration, evaluating each wavenumber at
/// its own shifted frequency with the medium's exact permittivity. Converges
/// when both residuals drop below tol * omega; the map is a contraction for
/// v << 1. Throws ConvergenceError after max_iterations.
DopplerTriple doppler_selfconsistent(double omega, double v,
                                     const PlasmaBandMedium& medium1,
                                     const PlasmaBandMedium& medium2,
                                     double tol, int max_iterations = 100);

/// Cherenkov-form superradiance predicate: true iff omega - k v_source < 0,
/// i.e. the source outruns the in-medium phase velocity. k is signed.
bool superradiance_condition(double omega, double k, double v_source);

} // namespace superray

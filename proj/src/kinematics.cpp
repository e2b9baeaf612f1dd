#include "superray/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "superray/errors.hpp"

namespace superray {

double alpha(double epsilon, double v) {
    if (!(v >= 0.0)) throw std::domain_error("alpha: v must be >= 0");
    return (epsilon - 1.0) * v;
}

double wavenumber(double epsilon, double omega, double v, Direction direction) {
    if (!(omega > 0.0)) throw std::domain_error("wavenumber: omega must be > 0");
    if (!(v >= 0.0)) throw std::domain_error("wavenumber: v must be >= 0");
    if (epsilon < 0.0) {
        throw EvanescentBandError("wavenumber: epsilon < 0 (evanescent band)");
    }
    const double drag = alpha(epsilon, v);
    const double root = std::sqrt(epsilon);
    return direction == Direction::right ? (root + drag) * omega
                                         : -(root - drag) * omega;
}

WaveMode WaveMode::make(double epsilon, double omega, double v, Direction direction) {
    return WaveMode{omega, wavenumber(epsilon, omega, v, direction), direction, epsilon, v};
}

DopplerTriple doppler_first_order(double omega, double v, double eps1, double eps2) {
    if (!(omega > 0.0)) throw std::domain_error("doppler_first_order: omega must be > 0");
    if (!(v >= 0.0)) throw std::domain_error("doppler_first_order: v must be >= 0");
    if (eps1 < 0.0 || eps2 < 0.0) {
        throw EvanescentBandError("doppler_first_order: negative permittivity");
    }
    const double s1 = std::sqrt(eps1);
    const double s2 = std::sqrt(eps2);
    return DopplerTriple{omega, omega * (1.0 - 2.0 * v * s1), omega * (1.0 - v * (s1 - s2))};
}

namespace {

double checked_epsilon(const PlasmaBandMedium& medium, double omega, const char* which) {
    const double eps = medium.epsilon(omega);
    if (eps < 0.0) {
        throw EvanescentBandError(std::string("doppler_selfconsistent: ") + which +
                                  " frequency fell into the evanescent band");
    }
    return eps;
}

} // namespace

DopplerTriple doppler_selfconsistent(double omega, double v,
                                     const PlasmaBandMedium& medium1,
                                     const PlasmaBandMedium& medium2,
                                     double tol, int max_iterations) {
    if (!(omega > 0.0)) throw std::domain_error("doppler_selfconsistent: omega must be > 0");
    if (!(v >= 0.0)) throw std::domain_error("doppler_selfconsistent: v must be >= 0");
    if (!(tol > 0.0)) throw std::domain_error("doppler_selfconsistent: tol must be > 0");

    const double eps_in = checked_epsilon(medium1, omega, "incident");
    const double k_in = wavenumber(eps_in, omega, v, Direction::right);
    const double conserved = omega - k_in * v;

    double omega_r = omega;
    double omega_2 = omega;
    for (int it = 0; it < max_iterations; ++it) {
        const double eps_r = checked_epsilon(medium1, omega_r, "reflected");
        const double k_r = wavenumber(eps_r, omega_r, v, Direction::left);
        const double eps_2 = checked_epsilon(medium2, omega_2, "transmitted");
        const double k_2 = wavenumber(eps_2, omega_2, v, Direction::right);

        const double res_r = std::abs(conserved - (omega_r - k_r * v));
        const double res_2 = std::abs(conserved - (omega_2 - k_2 * v));
        if (res_r <= tol * omega && res_2 <= tol * omega) {
            return DopplerTriple{omega, omega_r, omega_2};
        }

        // omega_r (1 + (sqrt(eps) - alpha) v) = conserved, and likewise for
        // the transmitted branch with the opposite sign.
        omega_r = conserved / (1.0 + (std::sqrt(eps_r) - alpha(eps_r, v)) * v);
        omega_2 = conserved / (1.0 - (std::sqrt(eps_2) + alpha(eps_2, v)) * v);
    }
    throw ConvergenceError("doppler_selfconsistent: no convergence within iteration budget");
}

bool superradiance_condition(double omega, double k, double v_source) {
    if (!(omega > 0.0)) throw std::domain_error("superradiance_condition: omega must be > 0");
    return omega - k * v_source < 0.0;
}

} // namespace superray

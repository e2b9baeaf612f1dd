#include "superray/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace superray {

double plasma_frequency(double n_e_cm3, const PhysicalConstants& c) {
    if (!(n_e_cm3 >= 0.0)) {
        throw std::domain_error("plasma_frequency: electron density must be >= 0");
    }
    const double e = c.electron_charge_esu;
    return std::sqrt(4.0 * std::numbers::pi * n_e_cm3 * e * e / c.electron_mass_g);
}

double omega_to_ev(double omega_rad_s, const PhysicalConstants& c) {
    if (!(omega_rad_s >= 0.0) || !std::isfinite(omega_rad_s)) {
        throw std::domain_error("omega_to_ev: frequency must be finite and >= 0");
    }
    return c.hbar_ev_s * omega_rad_s;
}

double ev_to_omega(double energy_ev, const PhysicalConstants& c) {
    if (!(energy_ev >= 0.0) || !std::isfinite(energy_ev)) {
        throw std::domain_error("ev_to_omega: energy must be finite and >= 0");
    }
    return energy_ev / c.hbar_ev_s;
}

} // namespace superray

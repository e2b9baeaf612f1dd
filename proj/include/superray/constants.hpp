#pragma once

namespace superray {

/// Physical constants in Gaussian (CGS) units. The scattering core is
/// dimensionless; these enter only when converting electron densities and
/// angular frequencies to laboratory numbers.
///
/// Values derive from the exact 2019 SI definitions (h, e, c exact), so the
/// two representations of hbar are mutually consistent to double precision.
struct PhysicalConstants {
    double electron_charge_esu;   // statC
    double electron_mass_g;       // g
    double hbar_ev_s;             // eV s
    double hbar_erg_s;            // erg s
    double speed_of_light_cm_s;   // cm/s
    double erg_per_ev;            // erg / eV
};

inline constexpr PhysicalConstants kCgs{
    4.8032047125702637e-10,   // e = 1.602176634e-19 C * c/10
    9.1093837015e-28,         // CODATA 2018
    6.582119569509066e-16,    // hbar / e
    1.0545718176461565e-27,   // h / (2 pi)
    2.99792458e10,
    1.602176634e-12,
};

/// Electron plasma frequency sqrt(4 pi n e^2 / m) in rad/s for a number
/// density in cm^-3. Throws std::domain_error for negative density.
double plasma_frequency(double n_e_cm3, const PhysicalConstants& c = kCgs);

/// hbar * omega in eV. Input must be finite and non-negative.
double omega_to_ev(double omega_rad_s, const PhysicalConstants& c = kCgs);

/// Inverse of omega_to_ev; the pair round-trips to relative 1e-14.
double ev_to_omega(double energy_ev, const PhysicalConstants& c = kCgs);

} // namespace superray

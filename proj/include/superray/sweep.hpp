#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superray/poles.hpp"

namespace superray {

enum class Spacing { linear, log };

/// Inclusive [lo, hi] grid with `points` samples. A single point collapses
/// to {lo}; endpoints are reproduced exactly.
struct GridRange {
    double lo;
    double hi;
    int points;
    Spacing spacing;

    std::vector<double> values() const;
    bool operator==(const GridRange&) const = default;
};

enum class OutputFormat { csv, json };

/// Cartesian sweep over front speed, density jump, background constant and
/// one energy-scale axis (either omega_tilde in eV directly, or electron
/// densities in cm^-3 from which the band edge follows). Exactly one of
/// omega_tilde_ev_values / n_e_values may be non-empty.
struct SweepConfig {
    GridRange v_range{1e-5, 1e-5, 1, Spacing::linear};
    GridRange delta_range{1e-4, 1e-2, 9, Spacing::log};
    std::vector<double> a_values{1.0};
    std::vector<double> omega_tilde_ev_values{1.0};
    std::vector<double> n_e_values{};
    double rel_tol = 1e-12;
    OutputFormat format = OutputFormat::csv;

    /// Throws ConfigError naming the offending key.
    void validate() const;

    bool operator==(const SweepConfig&) const = default;
};

enum class PoleStatus { pole, no_pole };

/// One grid point. Pole fields are empty for status = no_pole; for pole rows
/// pole_energy_ev = omega_tilde_ev * (1 + x_offset).
struct SpectrumRow {
    double v;
    double delta;
    double a;
    std::optional<double> n_e_cm3;
    double omega_tilde_ev;
    std::optional<double> pole_energy_ev;
    std::optional<double> x_offset;
    std::optional<double> f_residual;
    PoleStatus status;
};

/// Band-edge photon energy hbar * plasma_frequency(n_e) / sqrt(a) in eV: the
/// scale of the emitted light for a gas of the given electron density.
double emitted_energy_estimate(double n_e_cm3, double a);

/// Evaluates every grid point (in parallel when threads != 1; threads = 0
/// picks the hardware count) and returns rows ordered lexicographically by
/// (v, delta, a, energy axis). Output is bit-identical for any thread count.
/// Per-point failures are recorded in the row status, never thrown.
std::vector<SpectrumRow> run_sweep(const SweepConfig& config, unsigned threads = 0);

/// Exact header: v,delta,a,n_e_cm3,omega_tilde_ev,pole_energy_ev,x_offset,
/// f_residual,status. Floats in shortest round-trip decimal; absent optional
/// fields are empty.
void write_csv(std::ostream& out, const std::vector<SpectrumRow>& rows);

/// Array of objects with the same field names; absent fields are null.
void write_json(std::ostream& out, const std::vector<SpectrumRow>& rows);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

} // namespace superray

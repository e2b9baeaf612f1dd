#pragma once

#include <string>

#include "superray/sweep.hpp"

namespace superray {

/// Parses the line-oriented sweep configuration grammar:
///
///     # comment
///     [section]          (one of: v, delta, media, solver, output)
///     key = value
///
/// Sections are organizational; keys are globally unique flat names:
///
///     v_lo, v_hi, v_points, v_spacing        (linear | log)
///     delta_lo, delta_hi, delta_points, delta_spacing
///     a, omega_tilde_ev, n_e_cm3             (comma-separated lists)
///     rel_tol
///     format                                 (csv | json)
///
/// Unknown keys or sections are hard errors carrying the line number. The
/// returned config is validated. An empty file yields the defaults.
SweepConfig parse_config(const std::string& text, const std::string& source_name = "<string>");

/// parse_config on the contents of a file; a missing or unreadable file is a
/// ConfigError.
SweepConfig load_config(const std::string& path);

/// Canonical text form; load_config(dump_config(c)) == c.
std::string dump_config(const SweepConfig& config);

} // namespace superray

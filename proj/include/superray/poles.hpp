#pragma once

#include <optional>
#include <string>

#include "superray/scattering.hpp"

namespace superray {

/// Sign-changing interval for f in the offset variable x = omega/omega_tilde
/// - 1, with f(x_lo) < 0 < f(x_hi).
struct PoleBracket {
    double x_lo;
    double x_hi;
};

/// A located root of f: the frequency at which the reflection amplitude
/// diverges (classical stimulated emission). All root work happens in x,
/// where double precision resolves offsets far below omega_tilde's own
/// floating-point granularity.
struct PoleRecord {
    double omega_star;             // omega_tilde * (1 + x_offset)
    double x_offset;               // in (0, delta]
    PoleBracket bracket;
    double f_residual;             // f at omega_star
    int iterations;                // bisection steps
    double asymptotic_prediction;  // a v^2 / 2
};

/// Outcome of a bracket search. A missing bracket is a structured report
/// (static front, or no sign change in the band), not an error.
struct BracketSearch {
    std::optional<PoleBracket> bracket;
    std::string no_pole_reason;
    bool found() const { return bracket.has_value(); }
};

/// Outcome of a root search; see BracketSearch for the no-pole convention.
struct PoleSearch {
    std::optional<PoleRecord> record;
    std::string no_pole_reason;
    bool found() const { return record.has_value(); }
};

/// Leading-order root offset a v^2 / 2, from balancing sqrt(2 a delta)
/// against the singular attractor term v a sqrt(delta/x) of f. Serves as a
/// cross-check and bracket seed; delta cancels at this order.
double pole_asymptotic(double a, double v);

/// Scans a geometric x grid from min(1e-20, a v^2 / 20) up to delta for the
/// first sign change of f, refining the start downward geometrically when f
/// is not yet negative there. v = 0 or a sign-definite f yields a no-pole
/// report.
BracketSearch bracket_pole(const InterfaceScattering& scatter);

/// Brackets and then bisects f to relative width rel_tol in x (rel_tol >=
/// 1e-15; bisection keeps the sign-change invariant at every step, so the
/// result is deterministic bit-for-bit).
PoleSearch find_pole(const InterfaceScattering& scatter, double rel_tol = 1e-12);

} // namespace superray

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superray {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// v = 0 reduction: every amplitude method must reproduce the static Fresnel
/// coefficient to 1e-12 and conserve energy, R + (sqrt(eps2)/sqrt(eps1)) t^2
/// = 1, to 1e-10 across random linearized and exact media.
CheckResult check_fresnel_reduction(int samples = 1000, std::uint64_t seed = 0x5eedf001);

/// Closed-form amplitude vs direct jump-condition solve, agreement to 1e-10
/// relative on random in-band points with v <= 1e-3 (pole neighborhoods are
/// excluded by construction: sampled offsets sit far above a v^2 / 2).
CheckResult check_oracle_equivalence(int samples = 1000, std::uint64_t seed = 0x5eedf002);

/// |r_full - r_first_order| must scale as v^2: log-log slope 2 +- 0.1 over
/// v in [1e-6, 1e-3] at fixed in-band offset.
CheckResult check_first_order_scaling();

/// Root location and residual over the reference grid v = 1e-5, a in {1, 2},
/// delta in {1e-4, 1e-3, 1e-2}: a pole exists with x* < 1e-8, within a
/// factor 2 of a v^2 / 2, and |f(omega*)| <= 1e-6 sqrt(2 a delta).
CheckResult check_root_residuals();

/// All of the above, in order.
std::vector<CheckResult> run_validation_suite();

} // namespace superray

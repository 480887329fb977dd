#pragma once

#include <squeeze/grid.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace sqz::cli {

struct VerifyOptions {
    Grid grid = Grid::symmetric();
    std::size_t n_max = 128;
    /// Threshold for the oracle, norm, centre and phase checks. The other
    /// checks carry fixed thresholds.
    double tolerance = 1e-8;
    /// Extra state added to the random oracle, norm and phase samples.
    cplx s0{1.0, 0.0};
    cplx d0{0.0, 0.0};
    unsigned long seed = 20240611;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0; ///< worst error observed
    double threshold = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    double max_l2_error = 0.0;
    double max_phase_error = 0.0;

    bool passed() const;
};

/// Runs every invariant suite. Failures, including truncation and grid
/// errors raised by the oracle, are recorded in the report rather than thrown.
VerificationReport run_verification(const VerifyOptions& options);

} // namespace sqz::cli

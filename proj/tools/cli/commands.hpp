#pragma once

#include "cli/run_config.hpp"

#include <iosfwd>

namespace sqz::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

/// Rows (t, s_re, s_im, d_re, d_im, gamma, center, delta_phase, norm_error)
/// at n_steps + 1 uniform times in [t_start, t_end].
int cmd_evolve(const RunConfig& config, std::ostream& out);

/// Rows (x, psi_re, psi_im, density) on the grid at config.time.
int cmd_wavefunction(const RunConfig& config, std::ostream& out);

/// Pass/fail report of all invariant suites; returns kVerificationFailure
/// unless every check passes.
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Composed matrix of config.spec, its determinant and S2 for S1 = s1.
int cmd_symplectic(const RunConfig& config, std::ostream& out);

/// Full command-line entry point. Usage and configuration errors are written
/// to `err` and return kUsageError.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 15 significant digits in scientific notation, as written to CSV.
std::string format_number(double v);

} // namespace sqz::cli

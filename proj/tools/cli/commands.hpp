#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/table.hpp"

namespace rectiforce::cli {

struct CommandResult {
    Table table;
    bool all_converged = true;
    std::vector<std::string> diagnostics;  // per-row problems, for stderr
};

/// Columns: model, theta, zeta, f_reduced, f_norm, err_estimate, converged,
/// plus f_quantum and f_total when the quantum force is requested.
CommandResult cmd_force_profile(const RunConfig& config);

/// Long-format map with guide-curve columns. Quantum maps are
/// imaginary-axis integrands scaled by zeta^3; thermal maps are real-axis
/// integrands and spectrum maps the p-integrated thermal spectrum, both
/// scaled by zeta^2.
CommandResult cmd_spectral_map(const RunConfig& config);

/// Columns: theta, c_closed_norm, c_numeric_norm, f_norm_at_zeta<z>, converged.
CommandResult cmd_prefactor(const RunConfig& config);

/// Columns: quantity, route, value, unit.
CommandResult cmd_estimates(const RunConfig& config);

struct SelftestOptions {
    QuadratureSpec quadrature;
    bool perturb_branch = false;  // test hook: take the growing square-root branch
};

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<SelftestCheck> cmd_selftest(const SelftestOptions& options);

}  // namespace rectiforce::cli

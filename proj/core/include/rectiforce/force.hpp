#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rectiforce/kernels.hpp"
#include "rectiforce/medium.hpp"
#include "rectiforce/quadrature.hpp"

namespace rectiforce {

/// Depths below this are rejected for the Drude and plasma quadrature
/// paths; the local conductivity model does not describe them.
inline constexpr double kMinimumDepth = 0.05;

/// A force density in reduced units hbar / (c^4 tau^5) together with the
/// normalised value f_norm = -f z^2 lambda_p^2 / (k_B T)
///                         = -f zeta^2 / (theta Omega^4).
/// `normalized` is NaN when no temperature is attached (pure quantum force).
struct ForceValue {
    double reduced = 0.0;
    double normalized = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
    std::vector<std::string> diagnostics;
};

/// -f zeta^2 / (theta Omega^4).
double normalize_force(double reduced, double zeta, double theta, double omega_p_tau);
/// Inverse of normalize_force.
double denormalize_force(double normalized, double zeta, double theta, double omega_p_tau);

/// Thermal excess force (zero-temperature part subtracted), integrated along
/// real frequencies. For the ideal model this is force_ideal. `part`
/// restricts the conductivity to its real or imaginary part.
ForceValue force_thermal(const MaterialModel& model, double zeta, double theta,
                         const QuadratureSpec& spec = {},
                         ConductivityPart part = ConductivityPart::full);

/// Zero-temperature force from the contour rotated onto imaginary
/// frequencies.
ForceValue force_quantum(const MaterialModel& model, double zeta, const QuadratureSpec& spec = {});

/// Independent real-frequency evaluation of the zero-temperature force,
/// used to validate force_quantum. The ultraviolet tail of the frequency
/// integral only converges conditionally, so it is regulated by
/// exp(-(eta x)^2) and extrapolated to eta -> 0 from a halving sequence.
/// Drude only; expensive.
ForceValue force_quantum_real_axis(const MaterialModel& model, double zeta,
                                   const QuadratureSpec& spec = {});

namespace detail {

/// Zero-temperature double integral along real frequencies with the
/// regulator exp(-(eta x)^2), truncated where the regulator falls below
/// tail_epsilon. Building block of force_quantum_real_axis.
IntegrationResult regulated_real_axis_integral(const MaterialModel& model, double zeta, double eta,
                                               const QuadratureSpec& spec);

}  // namespace detail

/// force_thermal + force_quantum, normalised with theta.
ForceValue force_total(const MaterialModel& model, double zeta, double theta,
                       const QuadratureSpec& spec = {});

/// Closed-form thermal force of the ideal conductor, from the zero-frequency
/// conductivity weight: f = -theta Omega^4 J(zeta), so f_norm = zeta^2 J.
ForceValue force_ideal(double zeta, double theta, double omega_p_tau,
                       const QuadratureSpec& spec = {});

/// Short-distance amplitude c(T) of f ~ -c / z^2, in reduced units
/// (c_reduced, with f_reduced ~ -c_reduced / zeta^2) and normalised
/// (c lambda_p^2 / (k_B T)).
struct Prefactor {
    double reduced = 0.0;
    double normalized = 0.0;
};

/// Closed form (1/8 pi)(beta ln(beta / 2 pi) - pi - beta psi(beta / 2 pi)),
/// beta = 1 / theta.
Prefactor prefactor_c(double theta, double omega_p_tau = kDefaultOmegaPTau);

/// Same amplitude from (1 / 4 pi theta) * integral_0^inf x nbar(x) / (1 + x^2) dx.
Prefactor prefactor_c_numeric(double theta, double omega_p_tau = kDefaultOmegaPTau,
                              const QuadratureSpec& spec = {});

struct CrossingScanPoint {
    double zeta = 0.0;
    double difference = 0.0;  // f_norm(theta_1) - f_norm(theta_2)
};

struct CrossingResult {
    bool found = false;
    double zeta = 0.0;
    bool converged = true;
    std::vector<CrossingScanPoint> scan;
    std::string message;
};

struct CrossingOptions {
    double zeta_min = 1.0;
    double zeta_max = 8.0;
    double scan_step = 0.5;
    double tolerance = 1e-3;
    ConductivityPart part = ConductivityPart::full;
};

/// Depth where the normalised thermal force curves of two temperatures
/// cross. The first sign change of their difference on a scan of
/// [zeta_min, zeta_max] is refined by bisection. No sign change is reported
/// through `found = false`; equal temperatures throw.
CrossingResult crossing_depth(const MaterialModel& model, double theta_1, double theta_2,
                              const QuadratureSpec& spec = {}, const CrossingOptions& options = {});

struct ForcePoint {
    double zeta = 0.0;
    double theta = 0.0;
    MaterialModel model;
    double f_thermal = 0.0;
    double f_quantum = 0.0;
    double f_total = 0.0;
    double f_norm = 0.0;
    double error_estimate = 0.0;
    bool has_quantum = false;
    bool converged = true;
    std::string error;  // non-empty when the point could not be computed
};

struct ProfileOptions {
    bool include_quantum = false;
    ConductivityPart part = ConductivityPart::full;
    int jobs = 1;
};

/// Thermal (and optionally quantum) force over a depth grid for each
/// temperature. Rows are ordered by (theta, zeta) and are bitwise
/// independent of `jobs` and of the input ordering. Failures are recorded
/// per row.
std::vector<ForcePoint> force_profile(const MaterialModel& model, std::span<const double> zeta_grid,
                                      std::span<const double> theta_list,
                                      const QuadratureSpec& spec = {},
                                      const ProfileOptions& options = {});

}  // namespace rectiforce

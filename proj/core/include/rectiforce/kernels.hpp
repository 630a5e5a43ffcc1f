#pragma once

#include <optional>
#include <string_view>

#include "rectiforce/medium.hpp"

namespace rectiforce {

/// Which piece of the conductivity enters the integrand. `full` is the
/// complete force (current plus field fluctuations), `real_only` keeps only
/// the current-fluctuation term, `imag_only` only the field-fluctuation term.
enum class ConductivityPart { full, real_only, imag_only };

std::string_view to_string(ConductivityPart part);
/// Accepts "full", "real" / "real_only", "imag" / "imag_only".
std::optional<ConductivityPart> parse_conductivity_part(std::string_view name);

/// One evaluated integrand value, used by map generators.
struct KernelSample {
    double freq = 0.0;
    double p = 0.0;
    double zeta = 0.0;
    double value = 0.0;
};

cplx select_part(cplx sigma, ConductivityPart part);

// Real-axis integrands of the double integral over (x, p). Each returns
//   Re[ x sigma_part(x) w(x) p exp(2 i q zeta / Omega) (r_p + r_s) ]
// with occupation weight w = 2 nbar (thermal), coth (total) or 1 (quantum).
// The force density is -1/(2 pi) times the double integral, in units of
// hbar / (c^4 tau^5).

double thermal_kernel(const MaterialModel& model, ConductivityPart part, double x, double p,
                      double zeta, double theta);
double total_kernel(const MaterialModel& model, double x, double p, double zeta, double theta);
double quantum_kernel_real(const MaterialModel& model, double x, double p, double zeta);

/// Zero-temperature integrand after rotating the frequency contour onto
/// omega = i xi:  -xi sigma(i xi) p exp(-2 kappa zeta / Omega) (r_p + r_s),
/// with kappa^2 = eps(i xi) xi^2 + p^2. Integrated over xi, p > 0 it gives
/// the same double integral as quantum_kernel_real; the minus sign comes
/// from the contour rotation.
double quantum_kernel_imag(const MaterialModel& model, double xi, double p, double zeta);

/// exp(-2 Q zeta) Q kappa / (kappa + Q), kappa = sqrt(1 + Q^2), all lengths
/// in units of lambda_p.
double ideal_kernel(double q_hat, double zeta);

namespace detail {

/// exp(2 i q depth) (r_p + r_s) on the real axis, with q^2 = eps x^2 - p^2
/// and the vacuum wavevector v supplied by the caller. `depth` is
/// zeta / Omega in units of c tau.
cplx depth_response(cplx eps, double x2, double p2, cplx v, double depth);

/// Imaginary-axis counterpart for real eps(i xi): returns
/// exp(-2 kappa depth) (r_p + r_s) with v = i sqrt(xi^2 + p^2).
double rotated_depth_response(double eps, double xi2, double p2, double depth);

}  // namespace detail

}  // namespace rectiforce

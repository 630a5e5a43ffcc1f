#include "rectiforce/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "rectiforce/optics.hpp"

namespace rectiforce {
namespace {

void require_depth(double zeta)
{
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        throw std::invalid_argument("kernel: zeta must be positive and finite");
    }
}

double real_axis_kernel(const MaterialModel& model, ConductivityPart part, double x, double p,
                        double zeta, double weight)
{
    SpectralPoint{x, p, Axis::real}.validate();
    require_depth(zeta);
    if (weight == 0.0) return 0.0;
    const cplx sigma = conductivity(model, x);
    const cplx eps = 1.0 + cplx(0.0, 1.0) * sigma / x;
    const double x2 = x * x;
    const double p2 = p * p;
    const cplx v = branch_sqrt(cplx(x2 - p2, 0.0));
    const cplx response = detail::depth_response(eps, x2, p2, v, zeta / model.omega_p_tau);
    return (x * select_part(sigma, part) * weight * p * response).real();
}

}  // namespace

std::string_view to_string(ConductivityPart part)
{
    switch (part) {
    case ConductivityPart::full: return "full";
    case ConductivityPart::real_only: return "real";
    case ConductivityPart::imag_only: return "imag";
    }
    return "unknown";
}

std::optional<ConductivityPart> parse_conductivity_part(std::string_view name)
{
    if (name == "full") return ConductivityPart::full;
    if (name == "real" || name == "real_only") return ConductivityPart::real_only;
    if (name == "imag" || name == "imag_only") return ConductivityPart::imag_only;
    return std::nullopt;
}

cplx select_part(cplx sigma, ConductivityPart part)
{
    switch (part) {
    case ConductivityPart::full: return sigma;
    case ConductivityPart::real_only: return {sigma.real(), 0.0};
    case ConductivityPart::imag_only: return {0.0, sigma.imag()};
    }
    return sigma;
}

namespace detail {

cplx depth_response(cplx eps, double x2, double p2, cplx v, double depth)
{
    const cplx q = branch_sqrt(eps * x2 - p2);
    const cplx phase = std::exp(cplx(0.0, 2.0 * depth) * q);
    if (phase == 0.0) return 0.0;
    return phase * fresnel_sum(eps, q, v);
}

double rotated_depth_response(double eps, double xi2, double p2, double depth)
{
    const double kappa = std::sqrt(eps * xi2 + p2);
    const double nu = std::sqrt(xi2 + p2);
    const double damping = std::exp(-2.0 * kappa * depth);
    if (damping == 0.0) return 0.0;
    return damping * 2.0 * nu * kappa * (eps - 1.0) / ((eps * nu + kappa) * (kappa + nu));
}

}  // namespace detail

double thermal_kernel(const MaterialModel& model, ConductivityPart part, double x, double p,
                      double zeta, double theta)
{
    if (!(theta > 0.0)) throw std::invalid_argument("thermal_kernel: theta must be > 0");
    return real_axis_kernel(model, part, x, p, zeta, 2.0 * bose(x, theta));
}

double total_kernel(const MaterialModel& model, double x, double p, double zeta, double theta)
{
    return real_axis_kernel(model, ConductivityPart::full, x, p, zeta, coth_half(x, theta));
}

double quantum_kernel_real(const MaterialModel& model, double x, double p, double zeta)
{
    return real_axis_kernel(model, ConductivityPart::full, x, p, zeta, 1.0);
}

double quantum_kernel_imag(const MaterialModel& model, double xi, double p, double zeta)
{
    SpectralPoint{xi, p, Axis::imaginary}.validate();
    require_depth(zeta);
    const double sigma = conductivity_imaginary_axis(model, xi);
    const double eps = 1.0 + sigma / xi;
    return -xi * sigma * p
           * detail::rotated_depth_response(eps, xi * xi, p * p, zeta / model.omega_p_tau);
}

double ideal_kernel(double q_hat, double zeta)
{
    if (!(q_hat >= 0.0)) throw std::invalid_argument("ideal_kernel: Q must be >= 0");
    require_depth(zeta);
    const double kappa = std::hypot(1.0, q_hat);
    return std::exp(-2.0 * q_hat * zeta) * q_hat * kappa / (kappa + q_hat);
}

}  // namespace rectiforce

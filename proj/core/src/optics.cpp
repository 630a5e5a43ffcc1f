#include "rectiforce/optics.hpp"

#include <cmath>

namespace rectiforce {
namespace {

double signed_freq_squared(const SpectralPoint& point)
{
    const double f2 = point.freq * point.freq;
    return point.axis == Axis::real ? f2 : -f2;
}

}  // namespace

void SpectralPoint::validate() const
{
    if (!(freq > 0.0) || !std::isfinite(freq)) {
        throw std::invalid_argument("SpectralPoint: frequency must be positive");
    }
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("SpectralPoint: p must be >= 0");
    }
}

cplx branch_sqrt(cplx z)
{
    if (z.imag() == 0.0) z = {z.real(), 0.0};
    cplx s = std::sqrt(z);
    if (s.imag() < 0.0) s = -s;
    return s;
}

cplx medium_wavenumber_squared(cplx eps_r, const SpectralPoint& point)
{
    return eps_r * signed_freq_squared(point);
}

NormalWavevectors normal_wavevectors(cplx eps_r, const SpectralPoint& point)
{
    point.validate();
    const double f2 = signed_freq_squared(point);
    const double p2 = point.p * point.p;
    return {branch_sqrt(eps_r * f2 - p2), branch_sqrt(cplx(f2 - p2, 0.0))};
}

ReflectionPair fresnel_inner(cplx eps_r, cplx q, cplx v)
{
    const cplx den_p = eps_r * v + q;
    const cplx den_s = q + v;
    if (den_p == 0.0 || den_s == 0.0) {
        throw PoleError("fresnel_inner: vanishing denominator");
    }
    return {(eps_r * v - q) / den_p, (q - v) / den_s};
}

cplx fresnel_sum(cplx eps_r, cplx q, cplx v)
{
    const cplx den = (eps_r * v + q) * (q + v);
    if (den == 0.0) {
        throw PoleError("fresnel_sum: vanishing denominator");
    }
    return 2.0 * v * q * (eps_r - 1.0) / den;
}

cplx reflection_tensor_trace(cplx eps_r, cplx q, cplx v, const SpectralPoint& point)
{
    const auto [r_p, r_s] = fresnel_inner(eps_r, q, v);
    const cplx k2 = medium_wavenumber_squared(eps_r, point);
    // q^2 - p^2 written as k^2 - 2p^2 so the rounded root is not squared back.
    const double p2 = point.p * point.p;
    return r_s + r_p * (k2 - 2.0 * p2) / k2;
}

cplx angular_average_vector(cplx eps_r, cplx q, cplx v, const SpectralPoint& point)
{
    // <q> = q e_z and <e_p> = -(Q/k) e_z; (R T-bar) q = 2 r_p e_p q Q / k.
    const cplx trace = reflection_tensor_trace(eps_r, q, v, point);
    const cplx r_p = fresnel_inner(eps_r, q, v).r_p;
    const cplx k2 = medium_wavenumber_squared(eps_r, point);
    const double p2 = point.p * point.p;
    return trace * q + 2.0 * q * r_p * p2 / k2;
}

LayerResponse layer_response(const MaterialModel& model, const SpectralPoint& point)
{
    point.validate();
    const cplx eps = permittivity(model, point.freq, point.axis);
    const auto [q, v] = normal_wavevectors(eps, point);
    const auto [r_p, r_s] = fresnel_inner(eps, q, v);
    return {q, v, r_p, r_s};
}

double diffusion_frequency(double p, double omega_p_tau)
{
    if (!(p >= 0.0)) throw std::invalid_argument("diffusion_frequency: p must be >= 0");
    if (!(omega_p_tau > 0.0)) throw std::invalid_argument("diffusion_frequency: omega_p_tau must be > 0");
    return p * p / (omega_p_tau * omega_p_tau);
}

}  // namespace rectiforce

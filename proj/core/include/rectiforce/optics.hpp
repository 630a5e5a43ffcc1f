#pragma once

#include <stdexcept>

#include "rectiforce/medium.hpp"

namespace rectiforce {

/// Reduced frequency (x or xi) and in-plane wavevector p = c Q tau.
struct SpectralPoint {
    double freq = 1.0;
    double p = 0.0;
    Axis axis = Axis::real;

    void validate() const;
};

/// Normal wavevector components in units of 1/(c tau): q inside the
/// medium, v in vacuum.
struct NormalWavevectors {
    cplx q;
    cplx v;
};

struct ReflectionPair {
    cplx r_p;
    cplx r_s;
};

struct LayerResponse {
    cplx q;
    cplx v;
    cplx r_p;
    cplx r_s;
};

/// Raised when a Fresnel denominator vanishes exactly (guided-mode pole).
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Square root on the decaying branch: Im >= 0, and Re >= 0 whenever
/// Im(z) >= 0. Signed zeros in Im(z) are normalised to +0.
cplx branch_sqrt(cplx z);

/// q^2 = eps x^2 - p^2 and v^2 = x^2 - p^2 with omega -> i xi on the
/// imaginary axis; both roots on the decaying branch.
NormalWavevectors normal_wavevectors(cplx eps_r, const SpectralPoint& point);

/// Reflection amplitudes for waves incident on the interface from inside
/// the medium.
ReflectionPair fresnel_inner(cplx eps_r, cplx q, cplx v);

/// r_p + r_s = 2 v q (eps - 1) / ((eps v + q)(q + v)), without the
/// cancellation between the two terms at large p.
cplx fresnel_sum(cplx eps_r, cplx q, cplx v);

/// Trace of the reflection tensor R T-bar: r_s + r_p (q^2 - p^2) / k^2 with
/// k^2 = eps (omega/c)^2 taken from the point's frequency.
cplx reflection_tensor_trace(cplx eps_r, cplx q, cplx v, const SpectralPoint& point);

/// z-component after averaging tr(R T-bar) q - (R T-bar) q over the
/// in-plane angle; identically q (r_p + r_s).
cplx angular_average_vector(cplx eps_r, cplx q, cplx v, const SpectralPoint& point);

/// Full response of the half-space at one spectral point.
LayerResponse layer_response(const MaterialModel& model, const SpectralPoint& point);

/// Magnetic diffusion line omega = Q^2 / (mu0 sigma0) in reduced form.
double diffusion_frequency(double p, double omega_p_tau);

/// k^2 = eps omega^2 / c^2 in reduced units on the point's axis.
cplx medium_wavenumber_squared(cplx eps_r, const SpectralPoint& point);

}  // namespace rectiforce

#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "rectiforce/kernels.hpp"
#include "rectiforce/quadrature.hpp"

namespace rectiforce {

/// Frequency weight multiplying the current spectrum: 2 nbar for the
/// thermal excess, coth(x / 2 theta) for the total, 1 for zero temperature.
struct Occupation {
    enum class Kind { thermal, total, quantum };
    Kind kind = Kind::thermal;
    double theta = kDefaultTheta;

    static Occupation thermal(double theta) { return {Kind::thermal, theta}; }
    static Occupation total(double theta) { return {Kind::total, theta}; }
    static Occupation quantum() { return {Kind::quantum, 0.0}; }

    double weight(double x) const;
};

/// Wavevector integral at fixed frequency: the integral over p >= 0 of the
/// real-axis kernel selected by `occupation` and `part`, or of
/// quantum_kernel_imag on the imaginary axis (which only accepts
/// Occupation::quantum and part = full).
///
/// Real axis: the propagating range p < x is integrated in v = sqrt(x^2 -
/// p^2) and the evanescent range in w = sqrt(p^2 - x^2), so the light-cone
/// square root never sits inside a panel. The evanescent range ends where
/// the depth factor exp(-2 Im q zeta / Omega) has fallen below
/// tail_epsilon. For lossless models (plasma, ideal) the evanescent range
/// contributes nothing and is skipped; it also carries their surface
/// plasmon pole. `extra_splits` are additional p values to split at.
IntegrationResult q_integral(const MaterialModel& model, ConductivityPart part, double freq,
                             double zeta, const Occupation& occupation, Axis axis,
                             const QuadratureSpec& spec, std::span<const double> extra_splits = {});

/// Integration range and known knees of a frequency integral. An infinite
/// upper bound is handled with integrate_semi_infinite beyond the last
/// breakpoint using decay_scale.
struct OmegaDomain {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    std::vector<double> breakpoints;
    double decay_scale = 1.0;
};

/// Slice integrator: inner integral at one frequency.
using SliceFunction = std::function<IntegrationResult(double)>;

/// Outer frequency integral over slices. Any non-converged slice marks the
/// whole result non-converged; the diagnostics name the offending
/// frequencies.
IntegrationResult omega_integral(const SliceFunction& slice, const OmegaDomain& domain,
                                 const QuadratureSpec& spec);

/// [0, theta ln(1 / tail_epsilon)] with splits at the Drude knee x = 1, at
/// x = theta, where the skin depth matches the depth, and at decades.
OmegaDomain thermal_domain(double zeta, double theta, const QuadratureSpec& spec);

/// Imaginary-axis domain [0, inf) keyed to the scales 1, Omega and
/// Omega / zeta.
OmegaDomain quantum_domain(const MaterialModel& model, double zeta);

/// Thermal force spectrum at depth zeta: -1/(2 pi) times the p-integrated
/// thermal kernel, so that its x-integral is the thermal force density.
IntegrationResult spectral_density(const MaterialModel& model, double x, double zeta,
                                   double theta, const QuadratureSpec& spec,
                                   ConductivityPart part = ConductivityPart::full);

}  // namespace rectiforce

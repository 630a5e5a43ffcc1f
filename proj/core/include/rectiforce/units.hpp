#pragma once

#include <optional>

namespace rectiforce {

// CODATA 2018 values, SI.
namespace si {
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double k_B = 1.380649e-23;
inline constexpr double c = 299792458.0;
inline constexpr double e = 1.602176634e-19;
inline constexpr double epsilon_0 = 8.8541878128e-12;
inline constexpr double m_e = 9.1093837015e-31;
inline constexpr double electron_volt = e;
}  // namespace si

/// Physical anchors used only to translate reduced quantities to SI.
struct SiAnchors {
    double tau_seconds = 0.0;  // Drude scattering time
    double omega_p = 0.0;      // plasma frequency, rad/s
};

/// Reduced temperature theta = k_B T tau / hbar, with optional SI anchors.
struct ReducedUnits {
    double theta = 1.25;
    std::optional<SiAnchors> anchors;
};

/// Scale factors between the reduced system (x = omega tau, p = c Q tau,
/// zeta = z / lambda_p, theta = k_B T tau / hbar) and SI.
struct SiScales {
    double omega_p_tau = 0.0;           // dimensionless plasma frequency
    double plasma_wavelength = 0.0;     // lambda_p = c / Omega_p, m
    double energy_per_theta = 0.0;      // hbar / tau, J (k_B T = theta * this)
    double kelvin_per_theta = 0.0;      // hbar / (k_B tau), K
    double force_density = 0.0;         // hbar / (c^4 tau^5), N/m^3
};

/// All reduced-to-SI conversions go through this function.
SiScales si_scales(const SiAnchors& anchors);

/// Scattering time such that hbar / tau equals k_B times the given temperature.
double tau_from_kelvin(double kelvin);

double reduced_temperature(double kelvin, const SiAnchors& anchors);
double kelvin_from_theta(double theta, const SiAnchors& anchors);

}  // namespace rectiforce

#include "rectiforce/units.hpp"

#include <cmath>
#include <stdexcept>

namespace rectiforce {

SiScales si_scales(const SiAnchors& anchors)
{
    if (!(anchors.tau_seconds > 0.0) || !(anchors.omega_p > 0.0)) {
        throw std::invalid_argument("SI anchors require tau > 0 and omega_p > 0");
    }
    const double tau = anchors.tau_seconds;
    SiScales s;
    s.omega_p_tau = anchors.omega_p * tau;
    s.plasma_wavelength = si::c / anchors.omega_p;
    s.energy_per_theta = si::hbar / tau;
    s.kelvin_per_theta = s.energy_per_theta / si::k_B;
    s.force_density = si::hbar / (std::pow(si::c, 4) * std::pow(tau, 5));
    return s;
}

double tau_from_kelvin(double kelvin)
{
    if (!(kelvin > 0.0)) {
        throw std::invalid_argument("tau_from_kelvin: temperature must be positive");
    }
    return si::hbar / (si::k_B * kelvin);
}

double reduced_temperature(double kelvin, const SiAnchors& anchors)
{
    if (kelvin < 0.0) {
        throw std::invalid_argument("reduced_temperature: negative temperature");
    }
    return kelvin / si_scales(anchors).kelvin_per_theta;
}

double kelvin_from_theta(double theta, const SiAnchors& anchors)
{
    return theta * si_scales(anchors).kelvin_per_theta;
}

}  // namespace rectiforce

#include "rectiforce/estimates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rectiforce/force.hpp"

namespace rectiforce {
namespace {

constexpr double kGoldDensity = 5.90e28;
constexpr double kGoldScatteringKelvin = 400.0;
constexpr double kSquareMicron = 1e-12;

}  // namespace

void EstimateInputs::validate() const
{
    for (double v : {n0, v_F, m, tau_seconds, omega_p}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("EstimateInputs: n0, v_F, m, tau and omega_p must be positive");
        }
    }
}

double free_electron_fermi_velocity(double n0, double m)
{
    return si::hbar * std::cbrt(3.0 * std::numbers::pi * std::numbers::pi * n0) / m;
}

double free_electron_plasma_frequency(double n0, double m)
{
    return std::sqrt(si::e * si::e * n0 / (si::epsilon_0 * m));
}

EstimateInputs EstimateInputs::gold_like()
{
    EstimateInputs in;
    in.n0 = kGoldDensity;
    in.m = si::m_e;
    in.v_F = free_electron_fermi_velocity(in.n0, in.m);
    in.omega_p = free_electron_plasma_frequency(in.n0, in.m);
    in.tau_seconds = tau_from_kelvin(kGoldScatteringKelvin);
    return in;
}

WorkFunctionShift work_function_shift(const EstimateInputs& inputs, double theta)
{
    inputs.validate();
    const SiScales s = si_scales(inputs.anchors());
    const double kT = theta * s.energy_per_theta;
    const double lambda = s.plasma_wavelength;

    WorkFunctionShift out;
    out.theta = theta;
    out.c_norm = prefactor_c(theta, s.omega_p_tau).normalized;
    const double c_si = out.c_norm * kT / (lambda * lambda);  // N/m
    out.joules = -c_si / (inputs.n0 * inputs.screening_length());
    out.electron_volts = out.joules / si::electron_volt;

    out.fine_structure_term = si::e * si::e / (si::epsilon_0 * si::hbar * si::c);
    out.momentum_term = (si::hbar / lambda) / (inputs.m * inputs.v_F);
    out.factored_joules = -kFactoredAmplitude * kT * out.fine_structure_term * out.momentum_term;
    out.factored_electron_volts = out.factored_joules / si::electron_volt;
    return out;
}

SurfaceCharge surface_charge(const EstimateInputs& inputs, double theta, double zeta_cutoff)
{
    inputs.validate();
    const SiScales s = si_scales(inputs.anchors());
    const double kT = theta * s.energy_per_theta;
    const double lambda = s.plasma_wavelength;
    const double z_cut = zeta_cutoff > 0.0 ? zeta_cutoff * lambda : inputs.screening_length();

    SurfaceCharge out;
    out.theta = theta;
    out.zeta_cutoff = z_cut / lambda;
    const double c_si = prefactor_c(theta, s.omega_p_tau).normalized * kT / (lambda * lambda);
    const double force_density = -c_si / (z_cut * z_cut);  // N/m^3
    out.coulombs_per_m2 = si::epsilon_0 * force_density / (si::e * inputs.n0);
    out.elementary_per_um2 = out.coulombs_per_m2 * kSquareMicron / si::e;
    out.factored_coulombs_per_m2 = -kFactoredAmplitude * (si::e / (lambda * lambda)) * kT
                                   / (inputs.m * inputs.v_F * inputs.v_F);
    out.factored_elementary_per_um2 = out.factored_coulombs_per_m2 * kSquareMicron / si::e;
    return out;
}

}  // namespace rectiforce

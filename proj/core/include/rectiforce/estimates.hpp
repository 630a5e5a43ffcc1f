#pragma once

#include "rectiforce/units.hpp"

namespace rectiforce {

/// Electron-gas parameters for the SI estimates. Omega_p and tau are kept
/// as independent anchors so either can be overridden.
struct EstimateInputs {
    double n0 = 0.0;           // carrier density, 1/m^3
    double v_F = 0.0;          // Fermi velocity, m/s
    double m = 0.0;            // effective mass, kg
    double tau_seconds = 0.0;  // Drude scattering time
    double omega_p = 0.0;      // plasma frequency, rad/s

    void validate() const;

    /// Gold-like free-electron values: n0 = 5.90e28 / m^3, m = m_e, v_F and
    /// Omega_p from the free-electron gas, hbar / tau = k_B * 400 K.
    static EstimateInputs gold_like();

    SiAnchors anchors() const { return {tau_seconds, omega_p}; }
    double screening_length() const { return v_F / omega_p; }  // l_D
};

/// Free-electron Fermi velocity hbar (3 pi^2 n0)^(1/3) / m.
double free_electron_fermi_velocity(double n0, double m);
/// Plasma frequency sqrt(e^2 n0 / (eps0 m)).
double free_electron_plasma_frequency(double n0, double m);

/// Amplitude used by the factored estimates in place of c lambda_p^2 / (k_B T).
inline constexpr double kFactoredAmplitude = 0.06;

struct WorkFunctionShift {
    double theta = 0.0;
    double c_norm = 0.0;            // normalised short-distance amplitude at theta
    double joules = 0.0;            // -c(T) / (n0 l_D)
    double electron_volts = 0.0;
    double factored_joules = 0.0;   // -0.06 k_B T * fine_structure_term * momentum_term
    double factored_electron_volts = 0.0;
    double fine_structure_term = 0.0;  // e^2 / (eps0 hbar c) = 4 pi alpha
    double momentum_term = 0.0;        // (hbar / lambda_p) / (m v_F)
};

WorkFunctionShift work_function_shift(const EstimateInputs& inputs, double theta);

struct SurfaceCharge {
    double theta = 0.0;
    double zeta_cutoff = 0.0;
    double coulombs_per_m2 = 0.0;          // (eps0 / (e n0)) f(z_cut), f = -c / z^2
    double elementary_per_um2 = 0.0;
    double factored_coulombs_per_m2 = 0.0; // -0.06 (e / lambda_p^2) k_B T / (m v_F^2)
    double factored_elementary_per_um2 = 0.0;
};

/// Screening charge per area accumulated by the force down to the cutoff
/// depth. zeta_cutoff <= 0 selects l_D / lambda_p.
SurfaceCharge surface_charge(const EstimateInputs& inputs, double theta, double zeta_cutoff = 0.0);

}  // namespace rectiforce

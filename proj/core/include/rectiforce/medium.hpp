#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace rectiforce {

using cplx = std::complex<double>;

inline constexpr double kDefaultOmegaPTau = 210.0;
inline constexpr double kDefaultTheta = 1.25;

enum class MaterialKind { drude, plasma, ideal };

std::string_view to_string(MaterialKind kind);
std::optional<MaterialKind> parse_material_kind(std::string_view name);

/// Conductor response in reduced units. omega_p_tau is Omega_p * tau.
///
/// `ideal` shares the plasma model's purely imaginary AC conductivity; its
/// zero-frequency delta weight pi eps0 Omega_p^2 delta(omega) only enters
/// through the closed-form force in force.hpp.
struct MaterialModel {
    MaterialKind kind = MaterialKind::drude;
    double omega_p_tau = kDefaultOmegaPTau;

    void validate() const;
};

MaterialModel make_model(MaterialKind kind, double omega_p_tau = kDefaultOmegaPTau);

/// Which side of the complex frequency plane a reduced frequency lives on:
/// real x = omega tau, or imaginary xi tau with omega = i xi.
enum class Axis { real, imaginary };

/// sigma tau / eps0 at real reduced frequency x > 0.
cplx conductivity(const MaterialModel& model, double x);

/// sigma(i xi) tau / eps0 at reduced imaginary frequency xi > 0. Real.
double conductivity_imaginary_axis(const MaterialModel& model, double xi);

/// Relative permittivity 1 + i sigma / (eps0 omega) on either axis.
cplx permittivity(const MaterialModel& model, double freq, Axis axis = Axis::real);

/// Bose-Einstein occupation 1 / (exp(x/theta) - 1). Zero at theta = 0.
double bose(double x, double theta);

/// coth(x / 2 theta) = 1 + 2 bose(x, theta). One at theta = 0.
double coth_half(double x, double theta);

/// Reduced current-noise spectrum 2 x Re(sigma) coth(x / 2 theta).
double current_spectrum(const MaterialModel& model, double x, double theta);

}  // namespace rectiforce

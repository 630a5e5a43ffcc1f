#pragma once

namespace rectiforce {

/// Digamma psi(u) for real u > 0.
double digamma(double u);

inline constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace rectiforce

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rectiforce {

/// Tolerances and budgets shared by every integral in the library.
struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    double tail_epsilon = 1e-12;  // relative truncation threshold for tails

    void validate() const;

    /// Copy with rel_tol scaled by `factor`, floored near machine precision.
    QuadratureSpec scaled(double factor) const;
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
    std::vector<std::string> diagnostics;

    IntegrationResult& operator+=(const IntegrationResult& other);
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (15-point Kronrod, embedded 7-point
/// Gauss) on [a, b]. The panel with the largest error is bisected until the
/// total error meets max(rel_tol |I|, abs_tol) or max_subdivisions panels
/// exist. Deterministic for a given f and spec.
IntegrationResult integrate_adaptive(const RealFunction& f, double a, double b,
                                     const QuadratureSpec& spec);

/// Same, starting from the partition given by sorted `breakpoints`
/// (at least two entries). Knees of the integrand belong here.
IntegrationResult integrate_adaptive(const RealFunction& f, std::span<const double> breakpoints,
                                     const QuadratureSpec& spec);

/// Integral over [a, inf) of an integrand decaying at least like
/// exp(-(t - a) / decay_scale): consecutive segments of length decay_scale
/// are added until two in a row contribute below tail_epsilon of the
/// accumulated absolute value.
IntegrationResult integrate_semi_infinite(const RealFunction& f, double a,
                                          const QuadratureSpec& spec, double decay_scale);

/// Sorted, de-duplicated breakpoints restricted to [a, b], endpoints included.
std::vector<double> make_breakpoints(double a, double b, std::span<const double> interior);

}  // namespace rectiforce

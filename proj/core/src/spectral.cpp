#include "rectiforce/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rectiforce/optics.hpp"

namespace rectiforce {
namespace {

constexpr std::size_t kMaxReportedSlices = 8;

bool is_lossless(const MaterialModel& model)
{
    return model.kind != MaterialKind::drude;
}

IntegrationResult real_axis_q_integral(const MaterialModel& model, ConductivityPart part, double x,
                                       double zeta, const Occupation& occupation,
                                       const QuadratureSpec& spec,
                                       std::span<const double> extra_splits)
{
    const double weight = occupation.weight(x);
    const cplx sigma = conductivity(model, x);
    const cplx amplitude = x * select_part(sigma, part) * weight;
    IntegrationResult out;
    if (amplitude == 0.0) return out;

    const double omega = model.omega_p_tau;
    const double depth = zeta / omega;
    const cplx eps = 1.0 + cplx(0.0, 1.0) * sigma / x;
    const double x2 = x * x;
    const cplx k2 = eps * x2;

    // Knees in p: the diffusion line, the medium wavenumber and Q = 1/z.
    std::vector<double> knees{omega * std::sqrt(x), std::sqrt(std::abs(k2)), omega / zeta,
                              0.5 * omega / zeta};
    knees.insert(knees.end(), extra_splits.begin(), extra_splits.end());

    // Propagating range in t = v: p^2 = x^2 - t^2, p dp = t dt (up to sign).
    std::vector<double> t_knees;
    for (double p : knees) {
        if (p > 0.0 && p < x) t_knees.push_back(std::sqrt(x2 - p * p));
    }
    const auto propagating = [&](double t) {
        const double p2 = std::max(x2 - t * t, 0.0);
        return t * (amplitude * detail::depth_response(eps, x2, p2, cplx(t, 0.0), depth)).real();
    };
    out += integrate_adaptive(propagating, make_breakpoints(0.0, x, t_knees), spec);

    if (is_lossless(model)) return out;

    // Evanescent range in w: v = i w, p^2 = x^2 + w^2, p dp = w dw.
    const double cutoff = omega * std::log(1.0 / spec.tail_epsilon) / (2.0 * zeta);
    const double p_max = 1.5 * std::sqrt(std::max(k2.real(), 0.0) + cutoff * cutoff);
    const double w_max = std::sqrt(std::max(p_max * p_max - x2, 0.0)) + cutoff;
    std::vector<double> w_knees;
    for (double p : knees) {
        if (p > x) w_knees.push_back(std::sqrt(p * p - x2));
    }
    const auto evanescent = [&](double w) {
        const double p2 = x2 + w * w;
        return w * (amplitude * detail::depth_response(eps, x2, p2, cplx(0.0, w), depth)).real();
    };
    out += integrate_adaptive(evanescent, make_breakpoints(0.0, w_max, w_knees), spec);
    return out;
}

IntegrationResult imaginary_axis_q_integral(const MaterialModel& model, double xi, double zeta,
                                            const QuadratureSpec& spec,
                                            std::span<const double> extra_splits)
{
    const double omega = model.omega_p_tau;
    const double depth = zeta / omega;
    const double sigma = conductivity_imaginary_axis(model, xi);
    const double eps = 1.0 + sigma / xi;
    const double xi2 = xi * xi;
    const double prefactor = -xi * sigma;
    const auto integrand = [&](double p) {
        return prefactor * p * detail::rotated_depth_response(eps, xi2, p * p, depth);
    };

    const double p_medium = std::sqrt(eps * xi2);
    std::vector<double> knees(extra_splits.begin(), extra_splits.end());
    IntegrationResult out = integrate_adaptive(integrand, make_breakpoints(0.0, p_medium, knees), spec);
    std::vector<double> beyond;
    for (double p : extra_splits) {
        if (p > p_medium) beyond.push_back(p);
    }
    double start = p_medium;
    if (!beyond.empty()) {
        const auto pts = make_breakpoints(p_medium, *std::max_element(beyond.begin(), beyond.end()),
                                          beyond);
        out += integrate_adaptive(integrand, pts, spec);
        start = pts.back();
    }
    out += integrate_semi_infinite(integrand, start, spec, 0.5 * omega / zeta);
    return out;
}

std::string format_frequency(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

double Occupation::weight(double x) const
{
    switch (kind) {
    case Kind::thermal: return 2.0 * bose(x, theta);
    case Kind::total: return coth_half(x, theta);
    case Kind::quantum: return 1.0;
    }
    return 0.0;
}

IntegrationResult q_integral(const MaterialModel& model, ConductivityPart part, double freq,
                             double zeta, const Occupation& occupation, Axis axis,
                             const QuadratureSpec& spec, std::span<const double> extra_splits)
{
    model.validate();
    spec.validate();
    SpectralPoint{freq, 0.0, axis}.validate();
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        throw std::invalid_argument("q_integral: zeta must be positive and finite");
    }
    if (axis == Axis::imaginary) {
        if (occupation.kind != Occupation::Kind::quantum || part != ConductivityPart::full) {
            throw std::invalid_argument(
                "q_integral: the imaginary axis only carries the zero-temperature full kernel");
        }
        return imaginary_axis_q_integral(model, freq, zeta, spec, extra_splits);
    }
    return real_axis_q_integral(model, part, freq, zeta, occupation, spec, extra_splits);
}

IntegrationResult omega_integral(const SliceFunction& slice, const OmegaDomain& domain,
                                 const QuadratureSpec& spec)
{
    spec.validate();
    std::vector<double> failing;
    std::size_t inner_evaluations = 0;
    const auto f = [&](double x) {
        IntegrationResult r = slice(x);
        inner_evaluations += r.evaluations;
        if (!r.converged) failing.push_back(x);
        return r.value;
    };

    const bool finite = std::isfinite(domain.upper);
    const double last = finite ? domain.upper
                               : std::max(domain.lower + domain.decay_scale,
                                          domain.breakpoints.empty()
                                              ? domain.lower
                                              : *std::max_element(domain.breakpoints.begin(),
                                                                  domain.breakpoints.end()));
    IntegrationResult out =
        integrate_adaptive(f, make_breakpoints(domain.lower, last, domain.breakpoints), spec);
    if (!finite) out += integrate_semi_infinite(f, last, spec, domain.decay_scale);

    out.evaluations += inner_evaluations;
    if (!failing.empty()) {
        std::sort(failing.begin(), failing.end());
        out.converged = false;
        std::string msg = std::to_string(failing.size()) + " frequency slice(s) did not converge, at x =";
        for (std::size_t i = 0; i < failing.size() && i < kMaxReportedSlices; ++i) {
            msg += " " + format_frequency(failing[i]);
        }
        if (failing.size() > kMaxReportedSlices) msg += " ...";
        out.diagnostics.push_back(msg);
    }
    return out;
}

OmegaDomain thermal_domain(double zeta, double theta, const QuadratureSpec& spec)
{
    OmegaDomain d;
    d.lower = 0.0;
    d.upper = theta * std::log(1.0 / spec.tail_epsilon);
    d.breakpoints = {1.0, theta, 0.5 / (zeta * zeta)};
    for (double decade = 1e-6; decade < d.upper; decade *= 10.0) d.breakpoints.push_back(decade);
    d.decay_scale = theta;
    return d;
}

OmegaDomain quantum_domain(const MaterialModel& model, double zeta)
{
    const double omega = model.omega_p_tau;
    OmegaDomain d;
    d.lower = 0.0;
    d.breakpoints = {std::min(1.0, 0.5 / (zeta * zeta)), 1.0, omega, omega * std::max(1.0, 1.0 / zeta)};
    d.decay_scale = 0.5 * omega / zeta;
    return d;
}

IntegrationResult spectral_density(const MaterialModel& model, double x, double zeta,
                                   double theta, const QuadratureSpec& spec, ConductivityPart part)
{
    IntegrationResult r =
        q_integral(model, part, x, zeta, Occupation::thermal(theta), Axis::real, spec);
    const double scale = -0.5 / std::numbers::pi;
    r.value *= scale;
    r.error_estimate *= std::abs(scale);
    return r;
}

}  // namespace rectiforce

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "cli/commands.hpp"
#include "rectiforce/force.hpp"
#include "rectiforce/optics.hpp"
#include "rectiforce/specfun.hpp"

namespace rectiforce::cli {
namespace {

constexpr int kRandomPoints = 1000;
constexpr std::uint64_t kSeed = 20240611;

struct LossyPoint {
    MaterialModel model;
    SpectralPoint point;
};

std::vector<LossyPoint> lossy_points(Axis axis)
{
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto log_uniform = [&](double lo, double hi) {
        return std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
    };
    std::vector<LossyPoint> pts;
    for (int i = 0; i < kRandomPoints; ++i) {
        const MaterialModel model = make_model(MaterialKind::drude, log_uniform(1.0, 500.0));
        pts.push_back({model, {log_uniform(1e-3, 1e3), log_uniform(1e-3, 1e4), axis}});
    }
    return pts;
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

SelftestCheck check_residual(const std::string& name, double worst, double tol)
{
    return {name, worst < tol, "max residual " + sci(worst) + " (limit " + sci(tol) + ")"};
}

SelftestCheck branch_rule(bool perturb)
{
    double worst_im = 0.0;
    double worst_decay = 0.0;
    for (const auto& [model, point] : lossy_points(Axis::real)) {
        const cplx eps = permittivity(model, point.freq);
        NormalWavevectors w = normal_wavevectors(eps, point);
        if (perturb) w.q = -w.q;
        worst_im = std::max(worst_im, -w.q.imag());
        worst_decay = std::max(worst_decay, std::abs(std::exp(cplx(0.0, 2.0) * w.q)) - 1.0);
    }
    const bool ok = worst_im <= 0.0 && worst_decay <= 1e-15;
    return {"branch rule (Im q >= 0, decaying depth factor)", ok,
            "min Im q " + sci(-worst_im) + ", max |exp(2iq)| - 1 " + sci(worst_decay)};
}

SelftestCheck fresnel_identity()
{
    double worst = 0.0;
    for (const auto& [model, point] : lossy_points(Axis::real)) {
        const LayerResponse r = layer_response(model, point);
        const cplx eps = permittivity(model, point.freq);
        const cplx sum = fresnel_sum(eps, r.q, r.v);
        worst = std::max(worst, std::abs(sum - (r.r_p + r.r_s)) / (1.0 + std::abs(r.r_p) + std::abs(r.r_s)));
    }
    return check_residual("fresnel sum = r_p + r_s", worst, 1e-11);
}

SelftestCheck angular_identity()
{
    double worst = 0.0;
    for (const auto& [model, point] : lossy_points(Axis::real)) {
        const LayerResponse r = layer_response(model, point);
        const cplx eps = permittivity(model, point.freq);
        const cplx lhs = angular_average_vector(eps, r.q, r.v, point);
        const cplx rhs = r.q * (r.r_p + r.r_s);
        // The two averages cancel to O(p^2 / |k^2|); measure against their size.
        const double p2 = point.p * point.p;
        const double scale = std::abs(r.q) * (std::abs(reflection_tensor_trace(eps, r.q, r.v, point)) +
                                              2.0 * std::abs(r.r_p) * p2 / std::abs(eps * point.freq * point.freq));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), scale));
    }
    return check_residual("angular average = q (r_p + r_s)", worst, 1e-11);
}

SelftestCheck passivity()
{
    double worst = 0.0;
    for (auto [model, point] : lossy_points(Axis::real)) {
        point.p = std::min(point.p, point.freq);  // flux bound needs a propagating vacuum wave
        const LayerResponse r = layer_response(model, point);
        worst = std::max({worst, std::abs(r.r_p) - 1.0, std::abs(r.r_s) - 1.0});
    }
    return {"passivity |r_p|, |r_s| <= 1 for p <= x", worst <= 1e-12, "max |r| - 1 = " + sci(worst)};
}

SelftestCheck imaginary_axis_realness()
{
    double worst = 0.0;
    for (const auto& [model, point] : lossy_points(Axis::imaginary)) {
        const LayerResponse r = layer_response(model, point);
        const cplx eps = permittivity(model, point.freq, Axis::imaginary);
        const cplx sum = fresnel_sum(eps, r.q, r.v);
        worst = std::max({worst, std::abs(r.r_p.imag()), std::abs(r.r_s.imag()), std::abs(sum.imag())});
    }
    return check_residual("imaginary-axis reflection coefficients are real", worst, 1e-13);
}

SelftestCheck quadrature_oracles(const QuadratureSpec& base)
{
    QuadratureSpec spec = base;
    spec.rel_tol = std::min(base.rel_tol, 1e-12);
    const double a = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, spec).value;
    const double z = 0.7;
    const double b = integrate_semi_infinite([z](double q) { return q * std::exp(-2.0 * q * z); }, 0.0, spec,
                                             0.5 / z)
                         .value;
    const double theta = 1.25;
    const double c = integrate_semi_infinite([theta](double x) { return x * bose(x, theta); }, 0.0, spec, theta)
                         .value;
    const double worst = std::max({std::abs(a * 3.0 - 1.0), std::abs(b * 4.0 * z * z - 1.0),
                                   std::abs(c / (std::numbers::pi * std::numbers::pi * theta * theta / 6.0) - 1.0)});
    return check_residual("quadrature closed forms", worst, 1e-10);
}

SelftestCheck digamma_values()
{
    const double gamma = 0.57721566490153286061;
    double worst = std::max(std::abs(digamma(1.0) + gamma),
                            std::abs(digamma(0.5) + gamma + 2.0 * std::numbers::ln2));
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> u(0.01, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng);
        worst = std::max(worst, std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x));
    }
    return check_residual("digamma known values and recurrence", worst, 1e-10);
}

SelftestCheck prefactor_routes(const QuadratureSpec& spec)
{
    double worst = 0.0;
    for (double theta : {0.03, 0.3, 1.0, 3.0, 30.0}) {
        const double closed = prefactor_c(theta).normalized;
        const double numeric = prefactor_c_numeric(theta, kDefaultOmegaPTau, spec).normalized;
        worst = std::max(worst, std::abs(closed - numeric) / std::abs(numeric));
    }
    return check_residual("prefactor closed form vs integral", worst, 1e-6);
}

SelftestCheck ideal_kernel_value()
{
    const double expected = std::exp(-2.0) * std::numbers::sqrt2 / (std::numbers::sqrt2 + 1.0);
    return check_residual("ideal-conductor kernel at zeta = Q = 1",
                          std::abs(ideal_kernel(1.0, 1.0) / expected - 1.0), 1e-14);
}

}  // namespace

std::vector<SelftestCheck> cmd_selftest(const SelftestOptions& options)
{
    std::vector<SelftestCheck> checks;
    const auto guarded = [&](auto&& fn) {
        try {
            checks.push_back(fn());
        } catch (const std::exception& e) {
            checks.push_back({"(exception)", false, e.what()});
        }
    };
    guarded([&] { return branch_rule(options.perturb_branch); });
    guarded(fresnel_identity);
    guarded(angular_identity);
    guarded(passivity);
    guarded(imaginary_axis_realness);
    guarded([&] { return quadrature_oracles(options.quadrature); });
    guarded(digamma_values);
    guarded([&] { return prefactor_routes(options.quadrature); });
    guarded(ideal_kernel_value);
    return checks;
}

}  // namespace rectiforce::cli

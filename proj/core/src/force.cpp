#include "rectiforce/force.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rectiforce/parallel.hpp"
#include "rectiforce/specfun.hpp"
#include "rectiforce/spectral.hpp"

namespace rectiforce {
namespace {

constexpr double kInnerTolFactor = 1e-2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_depth(const MaterialModel& model, double zeta, const char* where)
{
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        throw std::invalid_argument(std::string(where) + ": zeta must be positive and finite");
    }
    if (model.kind != MaterialKind::ideal && zeta < kMinimumDepth) {
        throw std::invalid_argument(std::string(where) + ": zeta below the local-model limit 0.05");
    }
}

void require_theta(double theta, const char* where)
{
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument(std::string(where) + ": theta must be positive and finite");
    }
}

// f = -I / (2 pi) for a double integral I over (x, p).
ForceValue from_double_integral(IntegrationResult r, double zeta, double theta, double omega)
{
    ForceValue f;
    f.reduced = -r.value / kTwoPi;
    f.error_estimate = r.error_estimate / kTwoPi;
    f.evaluations = r.evaluations;
    f.converged = r.converged;
    f.diagnostics = std::move(r.diagnostics);
    f.normalized = theta > 0.0 ? normalize_force(f.reduced, zeta, theta, omega)
                               : std::numeric_limits<double>::quiet_NaN();
    return f;
}

// Inner-integral tolerances. Slices change sign along curves in the
// (frequency, depth) plane, where a purely relative target cannot be met, so
// the absolute floor is tied to the slice magnitude probed at the knees.
template <typename Slice>
QuadratureSpec inner_spec(const Slice& slice, std::initializer_list<double> probes,
                          const QuadratureSpec& spec)
{
    QuadratureSpec probe = spec;
    probe.rel_tol = std::max(spec.rel_tol, 1e-6);
    double scale = 0.0;
    for (double x : probes) scale = std::max(scale, std::abs(slice(x, probe).value));
    QuadratureSpec inner = spec.scaled(kInnerTolFactor);
    inner.abs_tol = std::max(inner.abs_tol, kInnerTolFactor * spec.rel_tol * scale);
    return inner;
}

}  // namespace

namespace detail {

IntegrationResult regulated_real_axis_integral(const MaterialModel& model, double zeta, double eta,
                                               const QuadratureSpec& spec)
{
    const double omega = model.omega_p_tau;
    const auto raw = [&](double x, const QuadratureSpec& s) {
        return q_integral(model, ConductivityPart::full, x, zeta, Occupation::quantum(), Axis::real, s);
    };
    const QuadratureSpec inner = inner_spec(raw, {1.0, omega, omega / zeta}, spec);
    const double x_max = std::sqrt(std::log(1.0 / spec.tail_epsilon)) / eta;
    const auto slice = [&](double x) {
        IntegrationResult r = raw(x, inner);
        const double g = std::exp(-(eta * x) * (eta * x));
        r.value *= g;
        r.error_estimate *= g;
        return r;
    };
    OmegaDomain domain;
    domain.upper = x_max;
    domain.breakpoints = {std::min(1.0, 0.5 / (zeta * zeta)), 1.0, omega, omega / zeta};
    // One split per oscillation period of exp(2 i x zeta / Omega).
    const double period = std::numbers::pi * omega / zeta;
    for (double x = omega; x < x_max; x += period) domain.breakpoints.push_back(x);
    return omega_integral(slice, domain, spec);
}

}  // namespace detail

double normalize_force(double reduced, double zeta, double theta, double omega_p_tau)
{
    const double w2 = omega_p_tau * omega_p_tau;
    return -reduced * zeta * zeta / (theta * w2 * w2);
}

double denormalize_force(double normalized, double zeta, double theta, double omega_p_tau)
{
    const double w2 = omega_p_tau * omega_p_tau;
    return -normalized * theta * w2 * w2 / (zeta * zeta);
}

ForceValue force_thermal(const MaterialModel& model, double zeta, double theta,
                         const QuadratureSpec& spec, ConductivityPart part)
{
    model.validate();
    spec.validate();
    require_theta(theta, "force_thermal");
    if (model.kind == MaterialKind::ideal) return force_ideal(zeta, theta, model.omega_p_tau, spec);
    require_depth(model, zeta, "force_thermal");

    const Occupation occupation = Occupation::thermal(theta);
    const auto raw = [&](double x, const QuadratureSpec& s) {
        return q_integral(model, part, x, zeta, occupation, Axis::real, s);
    };
    const QuadratureSpec inner = inner_spec(raw, {0.01 * theta, theta, 1.0}, spec);
    const auto slice = [&](double x) { return raw(x, inner); };
    return from_double_integral(omega_integral(slice, thermal_domain(zeta, theta, spec), spec), zeta,
                                theta, model.omega_p_tau);
}

ForceValue force_quantum(const MaterialModel& model, double zeta, const QuadratureSpec& spec)
{
    model.validate();
    spec.validate();
    require_depth(model, zeta, "force_quantum");

    const auto raw = [&](double xi, const QuadratureSpec& s) {
        return q_integral(model, ConductivityPart::full, xi, zeta, Occupation::quantum(),
                          Axis::imaginary, s);
    };
    const QuadratureSpec inner = inner_spec(raw, {0.5 / (zeta * zeta), 1.0, model.omega_p_tau}, spec);
    const auto slice = [&](double xi) { return raw(xi, inner); };
    return from_double_integral(omega_integral(slice, quantum_domain(model, zeta), spec), zeta, 0.0,
                                model.omega_p_tau);
}

ForceValue force_quantum_real_axis(const MaterialModel& model, double zeta, const QuadratureSpec& spec)
{
    model.validate();
    spec.validate();
    if (model.kind != MaterialKind::drude) {
        throw std::invalid_argument("force_quantum_real_axis: only the Drude model is supported");
    }
    require_depth(model, zeta, "force_quantum_real_axis");

    // The regulator error is even in eta once eta is well below zeta / Omega,
    // so the table eliminates eta^2, eta^4, ... over halvings of eta.
    constexpr int kLevels = 4;
    const double eta_start = 0.125 * zeta / model.omega_p_tau;
    std::array<std::array<double, kLevels>, kLevels> table{};
    IntegrationResult total;
    for (int k = 0; k < kLevels; ++k) {
        IntegrationResult r =
            detail::regulated_real_axis_integral(model, zeta, eta_start / std::ldexp(1.0, k), spec);
        table[k][0] = r.value;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
        total.diagnostics.insert(total.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
        for (int j = 1; j <= k; ++j) {
            const double factor = std::ldexp(1.0, 2 * j);
            table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
        }
    }
    total.value = table[kLevels - 1][kLevels - 1];
    total.error_estimate = std::abs(table[kLevels - 1][kLevels - 1] - table[kLevels - 1][kLevels - 2]);
    return from_double_integral(std::move(total), zeta, 0.0, model.omega_p_tau);
}

ForceValue force_total(const MaterialModel& model, double zeta, double theta, const QuadratureSpec& spec)
{
    ForceValue thermal = force_thermal(model, zeta, theta, spec);
    ForceValue quantum = force_quantum(model, zeta, spec);
    ForceValue out = std::move(thermal);
    out.reduced += quantum.reduced;
    out.error_estimate += quantum.error_estimate;
    out.evaluations += quantum.evaluations;
    out.converged = out.converged && quantum.converged;
    out.diagnostics.insert(out.diagnostics.end(), quantum.diagnostics.begin(), quantum.diagnostics.end());
    out.normalized = normalize_force(out.reduced, zeta, theta, model.omega_p_tau);
    return out;
}

ForceValue force_ideal(double zeta, double theta, double omega_p_tau, const QuadratureSpec& spec)
{
    make_model(MaterialKind::ideal, omega_p_tau);
    spec.validate();
    require_theta(theta, "force_ideal");
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        throw std::invalid_argument("force_ideal: zeta must be positive and finite");
    }
    const auto f = [zeta](double q) { return ideal_kernel(q, zeta); };
    const double scale = 0.5 / zeta;
    const double knee = std::min(1.0, scale);
    IntegrationResult j = integrate_adaptive(f, 0.0, knee, spec);
    j += integrate_semi_infinite(f, knee, spec, scale);

    const double w2 = omega_p_tau * omega_p_tau;
    ForceValue out;
    out.reduced = -theta * w2 * w2 * j.value;
    out.normalized = zeta * zeta * j.value;
    out.error_estimate = theta * w2 * w2 * j.error_estimate;
    out.evaluations = j.evaluations;
    out.converged = j.converged;
    out.diagnostics = std::move(j.diagnostics);
    return out;
}

Prefactor prefactor_c(double theta, double omega_p_tau)
{
    require_theta(theta, "prefactor_c");
    make_model(MaterialKind::drude, omega_p_tau);
    const double beta = 1.0 / theta;
    const double u = beta / kTwoPi;
    const double c_norm =
        (beta * (std::log(u) - digamma(u)) - std::numbers::pi) / (8.0 * std::numbers::pi);
    const double w2 = omega_p_tau * omega_p_tau;
    return {c_norm * theta * w2 * w2, c_norm};
}

Prefactor prefactor_c_numeric(double theta, double omega_p_tau, const QuadratureSpec& spec)
{
    require_theta(theta, "prefactor_c_numeric");
    make_model(MaterialKind::drude, omega_p_tau);
    spec.validate();
    const auto f = [theta](double x) { return x * bose(x, theta) / (1.0 + x * x); };
    const double knee = std::max(1.0, theta);
    IntegrationResult r = integrate_adaptive(f, make_breakpoints(0.0, knee, std::array{1.0, theta}), spec);
    r += integrate_semi_infinite(f, knee, spec, theta);
    const double c_norm = r.value / (4.0 * std::numbers::pi * theta);
    const double w2 = omega_p_tau * omega_p_tau;
    return {c_norm * theta * w2 * w2, c_norm};
}

CrossingResult crossing_depth(const MaterialModel& model, double theta_1, double theta_2,
                              const QuadratureSpec& spec, const CrossingOptions& options)
{
    require_theta(theta_1, "crossing_depth");
    require_theta(theta_2, "crossing_depth");
    if (theta_1 == theta_2) throw std::invalid_argument("crossing_depth: the two temperatures coincide");
    if (!(options.zeta_min > 0.0 && options.zeta_max > options.zeta_min && options.scan_step > 0.0
          && options.tolerance > 0.0)) {
        throw std::invalid_argument("crossing_depth: invalid scan options");
    }

    CrossingResult out;
    if (model.kind == MaterialKind::ideal) {
        out.message = "ideal-conductor normalised force is temperature independent";
        return out;
    }
    const auto difference = [&](double zeta) {
        const ForceValue a = force_thermal(model, zeta, theta_1, spec, options.part);
        const ForceValue b = force_thermal(model, zeta, theta_2, spec, options.part);
        out.converged = out.converged && a.converged && b.converged;
        return a.normalized - b.normalized;
    };

    const int steps =
        static_cast<int>(std::ceil((options.zeta_max - options.zeta_min) / options.scan_step - 1e-9));
    for (int i = 0; i <= steps; ++i) {
        const double zeta = std::min(options.zeta_min + i * options.scan_step, options.zeta_max);
        out.scan.push_back({zeta, difference(zeta)});
        const auto n = out.scan.size();
        if (out.scan[n - 1].difference == 0.0) {
            out.found = true;
            out.zeta = zeta;
            return out;
        }
        if (n >= 2 && std::signbit(out.scan[n - 1].difference) != std::signbit(out.scan[n - 2].difference)) {
            double lo = out.scan[n - 2].zeta;
            double hi = out.scan[n - 1].zeta;
            double d_lo = out.scan[n - 2].difference;
            while (hi - lo > options.tolerance) {
                const double mid = 0.5 * (lo + hi);
                const double d_mid = difference(mid);
                if (d_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (std::signbit(d_mid) == std::signbit(d_lo)) {
                    lo = mid;
                    d_lo = d_mid;
                } else {
                    hi = mid;
                }
            }
            out.found = true;
            out.zeta = 0.5 * (lo + hi);
            return out;
        }
    }
    out.message = "no sign change of the force difference on the scanned depth range";
    return out;
}

std::vector<ForcePoint> force_profile(const MaterialModel& model, std::span<const double> zeta_grid,
                                      std::span<const double> theta_list, const QuadratureSpec& spec,
                                      const ProfileOptions& options)
{
    model.validate();
    spec.validate();
    for (double z : zeta_grid) {
        if (!(z > 0.0) || !std::isfinite(z)) throw std::invalid_argument("force_profile: depths must be positive");
    }
    std::vector<double> zetas(zeta_grid.begin(), zeta_grid.end());
    std::vector<double> thetas(theta_list.begin(), theta_list.end());
    std::sort(zetas.begin(), zetas.end());
    std::sort(thetas.begin(), thetas.end());

    std::vector<ForcePoint> rows(zetas.size() * thetas.size());
    parallel_for(rows.size(), options.jobs, [&](std::size_t i) {
        ForcePoint& row = rows[i];
        row.theta = thetas[i / zetas.size()];
        row.zeta = zetas[i % zetas.size()];
        row.model = model;
        row.f_quantum = std::numeric_limits<double>::quiet_NaN();
        row.f_total = std::numeric_limits<double>::quiet_NaN();
        try {
            const ForceValue th = force_thermal(model, row.zeta, row.theta, spec, options.part);
            row.f_thermal = th.reduced;
            row.f_norm = th.normalized;
            row.error_estimate = th.error_estimate;
            row.converged = th.converged;
            if (options.include_quantum) {
                const ForceValue qu = force_quantum(model, row.zeta, spec);
                row.has_quantum = true;
                row.f_quantum = qu.reduced;
                row.f_total = th.reduced + qu.reduced;
                row.error_estimate += qu.error_estimate;
                row.converged = row.converged && qu.converged;
            }
        } catch (const std::exception& e) {
            row.converged = false;
            row.f_thermal = row.f_norm = std::numeric_limits<double>::quiet_NaN();
            row.error = e.what();
        }
    });
    return rows;
}

}  // namespace rectiforce

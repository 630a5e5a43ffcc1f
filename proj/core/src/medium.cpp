#include "rectiforce/medium.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rectiforce {
namespace {

// Below this x/theta the occupation factors switch to their Laurent series.
constexpr double kSeriesThreshold = 1e-4;

void require_positive_frequency(double freq, const char* where)
{
    if (!(freq > 0.0) || !std::isfinite(freq)) {
        throw std::invalid_argument(std::string(where) + ": frequency must be positive and finite");
    }
}

void require_temperature(double theta, const char* where)
{
    if (!(theta >= 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument(std::string(where) + ": theta must be >= 0");
    }
}

}  // namespace

std::string_view to_string(MaterialKind kind)
{
    switch (kind) {
    case MaterialKind::drude: return "drude";
    case MaterialKind::plasma: return "plasma";
    case MaterialKind::ideal: return "ideal";
    }
    return "unknown";
}

std::optional<MaterialKind> parse_material_kind(std::string_view name)
{
    if (name == "drude") return MaterialKind::drude;
    if (name == "plasma") return MaterialKind::plasma;
    if (name == "ideal") return MaterialKind::ideal;
    return std::nullopt;
}

void MaterialModel::validate() const
{
    if (!(omega_p_tau > 0.0) || !std::isfinite(omega_p_tau)) {
        throw std::invalid_argument("MaterialModel: omega_p_tau must be positive and finite");
    }
}

MaterialModel make_model(MaterialKind kind, double omega_p_tau)
{
    MaterialModel m{kind, omega_p_tau};
    m.validate();
    return m;
}

cplx conductivity(const MaterialModel& model, double x)
{
    require_positive_frequency(x, "conductivity");
    const double w2 = model.omega_p_tau * model.omega_p_tau;
    switch (model.kind) {
    case MaterialKind::drude: return w2 / cplx(1.0, -x);
    case MaterialKind::plasma:
    case MaterialKind::ideal: return {0.0, w2 / x};
    }
    return {};
}

double conductivity_imaginary_axis(const MaterialModel& model, double xi)
{
    require_positive_frequency(xi, "conductivity_imaginary_axis");
    const double w2 = model.omega_p_tau * model.omega_p_tau;
    switch (model.kind) {
    case MaterialKind::drude: return w2 / (1.0 + xi);
    case MaterialKind::plasma:
    case MaterialKind::ideal: return w2 / xi;
    }
    return 0.0;
}

cplx permittivity(const MaterialModel& model, double freq, Axis axis)
{
    if (axis == Axis::real) {
        return 1.0 + cplx(0.0, 1.0) * conductivity(model, freq) / freq;
    }
    // omega = i xi: i sigma(i xi) / (i xi) = sigma(i xi) / xi.
    return {1.0 + conductivity_imaginary_axis(model, freq) / freq, 0.0};
}

double bose(double x, double theta)
{
    require_positive_frequency(x, "bose");
    require_temperature(theta, "bose");
    if (theta == 0.0) return 0.0;
    const double u = x / theta;
    if (u < kSeriesThreshold) {
        return 1.0 / u - 0.5 + u / 12.0;
    }
    return 1.0 / std::expm1(u);
}

double coth_half(double x, double theta)
{
    require_positive_frequency(x, "coth_half");
    require_temperature(theta, "coth_half");
    if (theta == 0.0) return 1.0;
    const double u = x / theta;
    if (u < kSeriesThreshold) {
        return 2.0 / u + u / 6.0;
    }
    return 1.0 / std::tanh(0.5 * u);
}

double current_spectrum(const MaterialModel& model, double x, double theta)
{
    return 2.0 * x * conductivity(model, x).real() * coth_half(x, theta);
}

}  // namespace rectiforce

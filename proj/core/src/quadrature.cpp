#include "rectiforce/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rectiforce {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSemiInfiniteSegments = 1000;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool splittable;
};

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const
    {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;  // deterministic tie-break
    }
};

// One 15-point Kronrod panel with the QUADPACK error heuristic.
Panel gk15(const RealFunction& f, double a, double b)
{
    using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using gauss = boost::math::quadrature::gauss<double, 7>;
    static const auto& xk = kronrod::abscissa();
    static const auto& wk = kronrod::weights();
    static const auto& wg = gauss::weights();

    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 15> fv{};
    fv[0] = f(center);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double dx = half * xk[i];
        fv[2 * i - 1] = f(center - dx);
        fv[2 * i] = f(center + dx);
    }

    double res_k = fv[0] * wk[0];
    double res_g = fv[0] * wg[0];
    double res_abs = std::abs(res_k);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double pair = fv[2 * i - 1] + fv[2 * i];
        res_k += wk[i] * pair;
        res_abs += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
        if (i % 2 == 0) res_g += wg[i / 2] * pair;
    }
    const double mean = 0.5 * res_k;
    double res_asc = wk[0] * std::abs(fv[0] - mean);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        res_asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
    }

    double err = std::abs((res_k - res_g) * half);
    res_asc *= std::abs(half);
    res_abs *= std::abs(half);
    if (res_asc != 0.0 && err != 0.0) {
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        err = std::max(50.0 * kEps * res_abs, err);
    }
    if (!std::isfinite(res_k)) err = std::numeric_limits<double>::infinity();

    const bool splittable = std::abs(b - a) > 64.0 * kEps * std::max(std::abs(a), std::abs(b));
    return {a, b, res_k * half, err, splittable};
}

double tolerance(double value, const QuadratureSpec& spec)
{
    return std::max(spec.rel_tol * std::abs(value), spec.abs_tol);
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be >= 0");
    if (max_subdivisions < 1) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0)) {
        throw std::invalid_argument("QuadratureSpec: tail_epsilon must lie in (0, 1)");
    }
}

QuadratureSpec QuadratureSpec::scaled(double factor) const
{
    QuadratureSpec s = *this;
    s.rel_tol = std::max(rel_tol * factor, 1e-13);
    return s;
}

IntegrationResult& IntegrationResult::operator+=(const IntegrationResult& other)
{
    value += other.value;
    error_estimate += other.error_estimate;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
    return *this;
}

std::vector<double> make_breakpoints(double a, double b, std::span<const double> interior)
{
    std::vector<double> pts{a};
    for (double x : interior) {
        if (std::isfinite(x) && x > a && x < b) pts.push_back(x);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

IntegrationResult integrate_adaptive(const RealFunction& f, double a, double b,
                                     const QuadratureSpec& spec)
{
    const std::array<double, 2> pts{a, b};
    return integrate_adaptive(f, std::span<const double>(pts), spec);
}

IntegrationResult integrate_adaptive(const RealFunction& f, std::span<const double> breakpoints,
                                     const QuadratureSpec& spec)
{
    spec.validate();
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1])) {
            throw std::invalid_argument("integrate_adaptive: breakpoints must be strictly increasing");
        }
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    std::vector<Panel> frozen;
    IntegrationResult out;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        Panel p = gk15(f, breakpoints[i - 1], breakpoints[i]);
        out.evaluations += 15;
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }

    auto panel_count = [&] { return heap.size() + frozen.size(); };
    while (total_err > tolerance(total, spec) && !heap.empty()
           && panel_count() < static_cast<std::size_t>(std::max(spec.max_subdivisions, 1))) {
        Panel worst = heap.top();
        heap.pop();
        if (!worst.splittable) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in panel order so the result does not depend on update history.
    std::vector<Panel> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    out.value = 0.0;
    out.error_estimate = 0.0;
    for (const Panel& p : all) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    out.converged = std::isfinite(out.value) && out.error_estimate <= tolerance(out.value, spec);
    if (!out.converged) {
        out.diagnostics.push_back("adaptive quadrature on [" + std::to_string(breakpoints.front()) + ", "
                                  + std::to_string(breakpoints.back()) + "] stopped with error "
                                  + std::to_string(out.error_estimate) + " after "
                                  + std::to_string(all.size()) + " panels");
    }
    return out;
}

IntegrationResult integrate_semi_infinite(const RealFunction& f, double a,
                                          const QuadratureSpec& spec, double decay_scale)
{
    spec.validate();
    if (!(decay_scale > 0.0) || !std::isfinite(decay_scale)) {
        throw std::invalid_argument("integrate_semi_infinite: decay_scale must be positive");
    }
    IntegrationResult out;
    double accum_abs = 0.0;
    int quiet = 0;
    for (int n = 0; n < kMaxSemiInfiniteSegments; ++n) {
        QuadratureSpec local = spec;
        local.abs_tol = std::max(spec.abs_tol, 0.1 * spec.rel_tol * accum_abs);
        const double lo = a + n * decay_scale;
        const double hi = a + (n + 1) * decay_scale;
        IntegrationResult seg = integrate_adaptive(f, lo, hi, local);
        out.value += seg.value;
        out.error_estimate += seg.error_estimate;
        out.evaluations += seg.evaluations;
        if (!seg.converged) {
            out.converged = false;
            out.diagnostics.insert(out.diagnostics.end(), seg.diagnostics.begin(), seg.diagnostics.end());
        }
        accum_abs += std::abs(seg.value);
        if (std::abs(seg.value) <= spec.tail_epsilon * accum_abs) {
            if (++quiet == 2) {
                out.error_estimate += std::abs(seg.value);
                return out;
            }
        } else {
            quiet = 0;
        }
    }
    out.converged = false;
    out.diagnostics.push_back("semi-infinite integral from " + std::to_string(a)
                              + ": integrand not decaying on the scale " + std::to_string(decay_scale));
    return out;
}

}  // namespace rectiforce

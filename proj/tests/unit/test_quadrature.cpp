#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <numbers>

#include "helpers.hpp"
#include "rectiforce/quadrature.hpp"

using namespace rectiforce;

TEST_CASE("polynomial and exponential closed forms")
{
    const QuadratureSpec spec{.rel_tol = 1e-12};
    const auto square = integrate_adaptive([](double x) { return x * x; }, 0.0, 3.0, spec);
    CHECK(square.converged);
    CHECK(std::abs(square.value - 9.0) < 1e-12);

    for (double z : {0.1, 1.0, 7.0}) {
        const auto r = integrate_semi_infinite([z](double q) { return q * std::exp(-2.0 * q * z); },
                                               0.0, spec, 0.5 / z);
        CHECK(r.converged);
        CHECK(testing_support::rel_diff(r.value, 1.0 / (4.0 * z * z)) < 1e-10);
    }
}

TEST_CASE("Bose-weighted integral")
{
    const QuadratureSpec spec{.rel_tol = 1e-12};
    const auto f = [](double x) { return x / std::expm1(x); };
    const auto r = integrate_semi_infinite(f, 0.0, spec, 1.0);
    CHECK(r.converged);
    CHECK(testing_support::rel_diff(r.value, std::numbers::pi * std::numbers::pi / 6.0) < 1e-10);
}

TEST_CASE("breakpoints are honoured and deduplicated")
{
    const std::array<double, 4> interior{0.5, 0.5, -1.0, 4.0};
    const auto pts = make_breakpoints(0.0, 2.0, interior);
    REQUIRE(pts.size() == 3);
    CHECK(pts.front() == 0.0);
    CHECK(pts[1] == 0.5);
    CHECK(pts.back() == 2.0);

    const QuadratureSpec spec{.rel_tol = 1e-12};
    const auto kink = [](double x) { return std::abs(x - 0.5); };
    const auto r = integrate_adaptive(kink, std::span<const double>(pts), spec);
    CHECK(std::abs(r.value - 1.25) < 1e-13);
}

TEST_CASE("exhausted budget is flagged")
{
    QuadratureSpec spec{.rel_tol = 1e-14, .max_subdivisions = 1};
    const auto r = integrate_adaptive([](double x) { return std::sin(50.0 * x); }, 0.0, 10.0, spec);
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("non-decaying integrand is flagged")
{
    const auto r = integrate_semi_infinite([](double) { return 1.0; }, 0.0, QuadratureSpec{}, 1.0);
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("invalid specs are rejected")
{
    CHECK_THROWS_AS(QuadratureSpec{.rel_tol = 0.0}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec{.max_subdivisions = 0}.validate(), std::invalid_argument);
    CHECK_THROWS(integrate_adaptive([](double x) { return x; }, 1.0, 0.0, QuadratureSpec{}));
}

TEST_CASE("property: results are bit-for-bit deterministic")
{
    const auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x) / (1.0 + x * x); };
    const auto a = integrate_semi_infinite(f, 0.0, QuadratureSpec{}, 1.0);
    const auto b = integrate_semi_infinite(f, 0.0, QuadratureSpec{}, 1.0);
    CHECK(a.value == b.value);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("property: splitting invariance")
{
    testing_support::LogUniform draw(41);
    const QuadratureSpec spec{.rel_tol = 1e-10};
    const auto f = [](double x) { return std::exp(-0.3 * x) * std::sin(x) * std::sin(x); };
    const double whole = integrate_adaptive(f, 0.0, 20.0, spec).value;
    for (int i = 0; i < 50; ++i) {
        const double cut = draw.uniform(0.01, 19.99);
        const double split = integrate_adaptive(f, 0.0, cut, spec).value +
                             integrate_adaptive(f, cut, 20.0, spec).value;
        CHECK(testing_support::rel_diff(whole, split) < 1e-9);
    }
}

TEST_CASE("property: tightening tolerance does not increase the error")
{
    const auto f = [](double x) { return 1.0 / (1e-3 + x * x); };
    const double exact = 2.0 * std::atan(1.0 / std::sqrt(1e-3)) / std::sqrt(1e-3);
    double previous = INFINITY;
    for (double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
        const auto r = integrate_adaptive(f, -1.0, 1.0, QuadratureSpec{.rel_tol = tol});
        const double err = std::abs(r.value - exact) / exact;
        CHECK(err <= tol);
        CHECK(err <= previous * 1.0001 + 1e-15);
        previous = std::max(err, 1e-16);
    }
}

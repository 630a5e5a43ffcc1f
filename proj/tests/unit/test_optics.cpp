#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rectiforce/optics.hpp"

using namespace rectiforce;

namespace {

struct RandomPoint {
    MaterialModel model;
    SpectralPoint point;
};

RandomPoint draw_lossy(testing_support::LogUniform& draw, Axis axis = Axis::real)
{
    return {make_model(MaterialKind::drude, draw(1.0, 500.0)), {draw(1e-3, 1e3), draw(1e-3, 1e4), axis}};
}

// Magnitude of the two averaged terms that cancel down to q (r_p + r_s).
double assembly_scale(cplx eps, const LayerResponse& r, const SpectralPoint& pt)
{
    const double p2 = pt.p * pt.p;
    return std::abs(r.q) * (std::abs(reflection_tensor_trace(eps, r.q, r.v, pt)) +
                            2.0 * std::abs(r.r_p) * p2 / std::abs(eps * pt.freq * pt.freq));
}

}  // namespace

TEST_CASE("branch_sqrt picks the decaying root")
{
    CHECK(branch_sqrt(cplx(-4.0, 0.0)) == cplx(0.0, 2.0));
    CHECK(branch_sqrt(cplx(-4.0, -0.0)) == cplx(0.0, 2.0));
    CHECK(branch_sqrt(cplx(4.0, 0.0)) == cplx(2.0, 0.0));
    const cplx s = branch_sqrt(cplx(-1.0, -1e-3));
    CHECK(s.imag() > 0.0);
    CHECK(s.real() < 0.0);
}

TEST_CASE("vacuum on both sides: q = v and no reflection")
{
    const SpectralPoint pt{2.0, 3.0, Axis::real};
    const auto [q, v] = normal_wavevectors(1.0, pt);
    CHECK(q == v);
    const auto [r_p, r_s] = fresnel_inner(1.0, q, v);
    CHECK(std::abs(r_p) == 0.0);
    CHECK(std::abs(r_s) == 0.0);
    CHECK(std::abs(fresnel_sum(1.0, q, v)) == 0.0);
    CHECK(std::abs(reflection_tensor_trace(1.0, q, v, pt)) == 0.0);
}

TEST_CASE("evanescent branch is purely imaginary and positive")
{
    const auto [q, v] = normal_wavevectors(2.0, {1.0, 3.0, Axis::real});
    CHECK(q.real() == 0.0);
    CHECK(q.imag() == doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
}

TEST_CASE("skin-effect wavevector at low frequency")
{
    const auto m = make_model(MaterialKind::drude, 210.0);
    const double x = 1e-4;
    const SpectralPoint pt{x, 0.0, Axis::real};
    const auto [q, v] = normal_wavevectors(permittivity(m, x), pt);
    const double skin = std::sqrt(2.0 / (210.0 * 210.0 * x));
    const cplx expected = cplx(1.0, 1.0) / skin;
    CHECK(std::abs(q - expected) / std::abs(expected) < 1e-3);
    CHECK(v == cplx(x, 0.0));
}

TEST_CASE("imaginary axis: q and v purely imaginary")
{
    const auto m = make_model(MaterialKind::drude, 210.0);
    const SpectralPoint pt{3.0, 5.0, Axis::imaginary};
    const cplx eps = permittivity(m, 3.0, Axis::imaginary);
    const auto [q, v] = normal_wavevectors(eps, pt);
    CHECK(q.real() == 0.0);
    CHECK(q.imag() == doctest::Approx(std::sqrt(eps.real() * 9.0 + 25.0)).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(std::sqrt(34.0)).epsilon(1e-15));
}

TEST_CASE("normal incidence: both polarisations agree")
{
    const auto m = make_model(MaterialKind::drude, 210.0);
    const SpectralPoint pt{0.7, 0.0, Axis::real};
    const LayerResponse r = layer_response(m, pt);
    const cplx n = std::sqrt(permittivity(m, 0.7));
    const cplx expected = (n - 1.0) / (n + 1.0);
    CHECK(std::abs(r.r_p - expected) < 1e-13);
    CHECK(std::abs(r.r_s - expected) < 1e-13);
    const cplx eps = permittivity(m, 0.7);
    CHECK(std::abs(reflection_tensor_trace(eps, r.q, r.v, pt) - (r.r_p + r.r_s)) < 1e-13);
    CHECK(angular_average_vector(eps, r.q, r.v, pt) == r.q * (r.r_p + r.r_s));
}

TEST_CASE("large-p limits of the reflection amplitudes")
{
    const auto m = make_model(MaterialKind::drude, 210.0);
    for (double x : {0.1, 1.0, 30.0}) {
        const cplx eps = permittivity(m, x);
        const double p = 1e4 * x * std::max(1.0, std::sqrt(std::abs(eps)));
        const LayerResponse r = layer_response(m, {x, p, Axis::real});
        const cplx rs_limit = -(eps - 1.0) * x * x / (4.0 * p * p);
        const cplx rp_limit = (eps - 1.0) / (eps + 1.0);
        CHECK(std::abs(r.r_s / rs_limit - 1.0) < 1e-3);
        CHECK(std::abs(r.r_p / rp_limit - 1.0) < 1e-3);
    }
}

TEST_CASE("pole condition is reported")
{
    CHECK_THROWS_AS(fresnel_inner(-1.0, cplx(0, 1), cplx(0, 1)), PoleError);
    CHECK_THROWS_AS(fresnel_sum(-1.0, cplx(0, 1), cplx(0, 1)), PoleError);
    CHECK_THROWS_AS(fresnel_inner(2.0, cplx(0, 1), cplx(0, -1)), PoleError);
}

TEST_CASE("property: fresnel_sum equals r_p + r_s on 1000 lossy points")
{
    testing_support::LogUniform draw(21);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto [model, pt] = draw_lossy(draw);
        const LayerResponse r = layer_response(model, pt);
        const cplx eps = permittivity(model, pt.freq);
        const cplx sum = fresnel_sum(eps, r.q, r.v);
        worst = std::max(worst, std::abs(sum - (r.r_p + r.r_s)) / (1.0 + std::abs(r.r_p) + std::abs(r.r_s)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("property: angular average equals q (r_p + r_s) on 1000 lossy points")
{
    testing_support::LogUniform draw(22);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto [model, pt] = draw_lossy(draw);
        const LayerResponse r = layer_response(model, pt);
        const cplx eps = permittivity(model, pt.freq);
        const cplx lhs = angular_average_vector(eps, r.q, r.v, pt);
        const cplx rhs = r.q * (r.r_p + r.r_s);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), assembly_scale(eps, r, pt)));
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("property: branch rule holds everywhere")
{
    testing_support::LogUniform draw(23);
    for (int i = 0; i < 1000; ++i) {
        for (Axis axis : {Axis::real, Axis::imaginary}) {
            const auto [model, pt] = draw_lossy(draw, axis);
            const LayerResponse r = layer_response(model, pt);
            CHECK(r.q.imag() >= 0.0);
            CHECK(r.v.imag() >= 0.0);
            CHECK(r.q.real() >= 0.0);
        }
    }
}

TEST_CASE("property: imaginary-axis reflection is real, positive sum for Drude")
{
    testing_support::LogUniform draw(24);
    for (int i = 0; i < 1000; ++i) {
        const auto [model, pt] = draw_lossy(draw, Axis::imaginary);
        const LayerResponse r = layer_response(model, pt);
        const cplx eps = permittivity(model, pt.freq, Axis::imaginary);
        const cplx sum = fresnel_sum(eps, r.q, r.v);
        CHECK(std::abs(r.r_p.imag()) < 1e-13);
        CHECK(std::abs(r.r_s.imag()) < 1e-13);
        CHECK(std::abs(sum.imag()) < 1e-13);
        CHECK(sum.real() > 0.0);
    }
}

TEST_CASE("property: passivity for propagating vacuum waves")
{
    testing_support::LogUniform draw(25);
    for (int i = 0; i < 1000; ++i) {
        auto [model, pt] = draw_lossy(draw);
        pt.p = pt.freq * draw.uniform(0.0, 1.0);
        const LayerResponse r = layer_response(model, pt);
        CHECK(std::abs(r.r_p) <= 1.0 + 1e-12);
        CHECK(std::abs(r.r_s) <= 1.0 + 1e-12);
    }
}

TEST_CASE("evanescent r_p exceeds unity near the surface-plasmon condition")
{
    // Re eps = -1 at x = Omega / sqrt(2) for a weakly damped medium.
    const auto m = make_model(MaterialKind::drude, 210.0);
    const double x = 210.0 / std::sqrt(2.0);
    const LayerResponse r = layer_response(m, {x, 3.0 * x, Axis::real});
    CHECK(std::abs(r.r_p) > 1.0);
}

TEST_CASE("property: q continuous across the light cone for a lossy medium")
{
    const auto m = make_model(MaterialKind::drude, 210.0);
    for (double x : {0.01, 1.0, 100.0, 300.0}) {
        const cplx eps = permittivity(m, x);
        cplx prev = normal_wavevectors(eps, {x, x - 5e-6, Axis::real}).q;
        for (int k = -4; k <= 5; ++k) {
            const cplx q = normal_wavevectors(eps, {x, x + k * 1e-6, Axis::real}).q;
            CHECK(std::abs(q - prev) < 1e-5);
            prev = q;
        }
    }
}

TEST_CASE("diffusion line")
{
    CHECK(diffusion_frequency(210.0, 210.0) == 1.0);
    CHECK(diffusion_frequency(0.0, 210.0) == 0.0);
    CHECK(diffusion_frequency(210.0 * std::sqrt(2.0), 210.0) == doctest::Approx(2.0).epsilon(1e-15));
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "helpers.hpp"
#include "rectiforce/medium.hpp"

using namespace rectiforce;

TEST_CASE("Drude conductivity")
{
    const auto m = make_model(MaterialKind::drude, 210.0);
    const cplx s1 = conductivity(m, 1.0);
    CHECK(s1.real() == doctest::Approx(22050.0).epsilon(1e-15));
    CHECK(s1.imag() == doctest::Approx(22050.0).epsilon(1e-15));
    const cplx s0 = conductivity(m, 1e-12);
    CHECK(s0.real() == doctest::Approx(44100.0).epsilon(1e-12));
    CHECK(std::abs(s0.imag()) < 1e-7);
}

TEST_CASE("plasma conductivity and permittivity zero at the plasma frequency")
{
    const auto m = make_model(MaterialKind::plasma, 210.0);
    const cplx s = conductivity(m, 210.0);
    CHECK(s.real() == 0.0);
    CHECK(s.imag() == doctest::Approx(210.0).epsilon(1e-15));
    CHECK(std::abs(permittivity(m, 210.0)) < 1e-14);
    CHECK(permittivity(m, 70.0).real() == doctest::Approx(1.0 - 9.0).epsilon(1e-15));
}

TEST_CASE("imaginary-axis conductivity")
{
    const auto d = make_model(MaterialKind::drude, 210.0);
    const auto p = make_model(MaterialKind::plasma, 210.0);
    CHECK(conductivity_imaginary_axis(d, 1.0) == doctest::Approx(22050.0).epsilon(1e-15));
    CHECK(conductivity_imaginary_axis(d, 1e9) * 1e9 == doctest::Approx(44100.0).epsilon(1e-8));
    CHECK(conductivity_imaginary_axis(p, 1e6) / conductivity_imaginary_axis(d, 1e6)
          == doctest::Approx(1.0).epsilon(2e-6));
    const cplx eps = permittivity(d, 2.0, Axis::imaginary);
    CHECK(eps.imag() == 0.0);
    CHECK(eps.real() == doctest::Approx(1.0 + 44100.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("Drude permittivity at x = 1")
{
    const cplx eps = permittivity(make_model(MaterialKind::drude, 210.0), 1.0);
    CHECK(eps.real() == doctest::Approx(1.0 - 22050.0).epsilon(1e-15));
    CHECK(eps.imag() == doctest::Approx(22050.0).epsilon(1e-15));
}

TEST_CASE("frequency validation")
{
    const auto d = make_model(MaterialKind::drude);
    CHECK_THROWS_AS(conductivity(d, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(conductivity(d, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(conductivity_imaginary_axis(d, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(permittivity(d, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(make_model(MaterialKind::drude, 0.0), std::invalid_argument);
}

TEST_CASE("occupation closed forms")
{
    CHECK(bose(1.25, 1.25) == doctest::Approx(0.58197670686932642).epsilon(1e-14));
    CHECK(coth_half(1.25, 1.25) == doctest::Approx(2.1639534137386528).epsilon(1e-14));
    CHECK(bose(25.0, 1.25) == doctest::Approx(std::exp(-20.0)).epsilon(1e-8));
    CHECK(bose(1e-9, 1.0) * 1e-9 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(coth_half(1e3, 1.0) == 1.0);
    CHECK(bose(1.0, 0.0) == 0.0);
    CHECK(coth_half(1.0, 0.0) == 1.0);
}

TEST_CASE("property: coth_half = 1 + 2 bose over x/theta in [1e-6, 50]")
{
    testing_support::LogUniform draw(11);
    for (int i = 0; i < 1000; ++i) {
        const double theta = draw(1e-2, 1e2);
        const double x = theta * draw(1e-6, 50.0);
        const double lhs = coth_half(x, theta);
        CHECK(std::abs(lhs - 1.0 - 2.0 * bose(x, theta)) <= 1e-13 * lhs);
    }
}

TEST_CASE("property: bose is continuous across the series switch")
{
    for (double theta : {0.1, 1.0, 7.0}) {
        const double x = 1e-4 * theta;
        const double below = bose(x * (1.0 - 1e-12), theta);
        const double above = bose(x * (1.0 + 1e-12), theta);
        CHECK(testing_support::rel_diff(below, above) < 1e-10);
    }
}

TEST_CASE("property: bose decreasing and positive")
{
    double prev = bose(1e-6, 1.0);
    for (double x = 2e-6; x < 40.0; x *= 1.3) {
        const double b = bose(x, 1.0);
        CHECK(b > 0.0);
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("current spectrum")
{
    const auto d = make_model(MaterialKind::drude, 210.0);
    CHECK(current_spectrum(d, 1.25, 1.25) == doctest::Approx(93102.776142316674).epsilon(1e-13));
    CHECK(current_spectrum(d, 1e5, 1.0) == doctest::Approx(2.0 * 44100.0 / 1e5).epsilon(1e-9));
    CHECK(current_spectrum(make_model(MaterialKind::plasma), 3.0, 1.25) == 0.0);
}

TEST_CASE("property: Re sigma >= 0 and eps = 1 + i sigma / x on both axes")
{
    testing_support::LogUniform draw(12);
    for (int i = 0; i < 500; ++i) {
        for (auto kind : {MaterialKind::drude, MaterialKind::plasma, MaterialKind::ideal}) {
            const auto m = make_model(kind, draw(1.0, 1e3));
            const double x = draw(1e-4, 1e4);
            const cplx s = conductivity(m, x);
            CHECK(s.real() >= 0.0);
            const cplx eps = permittivity(m, x);
            CHECK(std::abs(eps - (1.0 + cplx(0, 1) * s / x)) <= 1e-13 * std::abs(eps));
            const double si = conductivity_imaginary_axis(m, x);
            CHECK(si > 0.0);
            CHECK(permittivity(m, x, Axis::imaginary).real()
                  == doctest::Approx(1.0 + si / x).epsilon(1e-14));
        }
    }
}

TEST_CASE("model names")
{
    CHECK(parse_material_kind("plasma") == MaterialKind::plasma);
    CHECK_FALSE(parse_material_kind("gold").has_value());
    CHECK(to_string(MaterialKind::ideal) == "ideal");
}

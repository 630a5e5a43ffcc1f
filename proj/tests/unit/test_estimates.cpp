#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "helpers.hpp"
#include "rectiforce/estimates.hpp"
#include "rectiforce/units.hpp"

using namespace rectiforce;
using testing_support::rel_diff;

namespace {
constexpr double kRoomTheta = 0.75;  // 300 K with tau anchored at 400 K
}

TEST_CASE("gold-like free-electron inputs")
{
    const auto in = EstimateInputs::gold_like();
    CHECK(rel_diff(in.omega_p, 1.37030592893e16) < 1e-9);
    CHECK(rel_diff(in.tau_seconds, 1.9095581443944e-14) < 1e-12);
    CHECK(rel_diff(in.v_F, 1394263.4278) < 1e-9);
    const SiScales s = si_scales(in.anchors());
    CHECK(rel_diff(s.omega_p_tau, 261.667884690) < 1e-9);
    CHECK(rel_diff(s.plasma_wavelength, 2.18777757339e-8) < 1e-9);
    CHECK(rel_diff(s.force_density, 5.1419626) < 1e-6);
}

TEST_CASE("work-function shift at room temperature")
{
    const auto w = work_function_shift(EstimateInputs::gold_like(), kRoomTheta);
    CHECK(rel_diff(w.c_norm, 0.0572787063) < 1e-8);
    CHECK(rel_diff(w.electron_volts, -5.1535e-7) < 1e-4);
    CHECK(rel_diff(w.factored_electron_volts, -5.3983e-7) < 1e-4);
    CHECK(rel_diff(w.fine_structure_term, 0.09170123695) < 1e-9);
    CHECK(rel_diff(w.momentum_term, 0.0037952393) < 1e-7);
}

TEST_CASE("surface charge at room temperature")
{
    const auto q = surface_charge(EstimateInputs::gold_like(), kRoomTheta);
    CHECK(rel_diff(q.elementary_per_um2, -0.27991) < 1e-4);
    CHECK(rel_diff(q.factored_elementary_per_um2, -0.29320) < 1e-4);
    CHECK(q.zeta_cutoff < 1.0);
}

TEST_CASE("property: routes agree within a factor of two near room temperature")
{
    testing_support::LogUniform draw(71);
    for (int i = 0; i < 100; ++i) {
        const double theta = draw(0.5, 2.5);
        const auto w = work_function_shift(EstimateInputs::gold_like(), theta);
        const auto q = surface_charge(EstimateInputs::gold_like(), theta);
        CHECK(w.electron_volts < 0.0);
        CHECK(q.elementary_per_um2 < 0.0);
        const double rw = w.electron_volts / w.factored_electron_volts;
        const double rq = q.elementary_per_um2 / q.factored_elementary_per_um2;
        CHECK(rw > 0.5);
        CHECK(rw < 2.0);
        CHECK(rq > 0.5);
        CHECK(rq < 2.0);
    }
}

TEST_CASE("property: scaling with temperature and density")
{
    const auto base = EstimateInputs::gold_like();
    const auto a = surface_charge(base, 0.6);
    const auto b = surface_charge(base, 1.2);
    CHECK(rel_diff(b.factored_coulombs_per_m2, 2.0 * a.factored_coulombs_per_m2) < 1e-14);

    auto dense = base;
    dense.n0 *= 2.0;
    const auto w1 = work_function_shift(base, kRoomTheta);
    const auto w2 = work_function_shift(dense, kRoomTheta);
    CHECK(rel_diff(w2.joules, 0.5 * w1.joules) < 1e-14);
}

TEST_CASE("invalid inputs are rejected")
{
    auto in = EstimateInputs::gold_like();
    in.v_F = 0.0;
    CHECK_THROWS_AS(work_function_shift(in, 1.0), std::invalid_argument);
}

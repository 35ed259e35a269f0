#include <doctest.h>

#include <cmath>

#include "transonic/background.hpp"
#include "transonic/errors.hpp"

using namespace transonic;

namespace {

InflowBackground nozzle() { return make_inflow_background(GasModel{}, NozzleGeometry{}, InletState{}); }

// Classical normal-shock ratios for a polytropic gas.
struct ShockRatios {
    double density, pressure, mach_sq;
};
ShockRatios normal_shock(double g, double M) {
    const double M2 = M * M;
    return {(g + 1.0) * M2 / ((g - 1.0) * M2 + 2.0), 1.0 + 2.0 * g / (g + 1.0) * (M2 - 1.0),
            (1.0 + 0.5 * (g - 1.0) * M2) / (g * M2 - 0.5 * (g - 1.0))};
}

}  // namespace

TEST_CASE("normal shock jump matches the closed-form ratios") {
    const GasModel gas{};
    for (double M : {1.2, 2.0, 3.5}) {
        const double c = std::sqrt(gas.gamma);
        const FlowState minus{M * c, 0.0, 0.0, 1.0, 1.0};
        const FlowState plus = jump_downstream(gas, minus);
        const ShockRatios ref = normal_shock(gas.gamma, M);
        CHECK(plus.density == doctest::Approx(ref.density).epsilon(1e-10));
        CHECK(pressure(gas, plus) / pressure(gas, minus) == doctest::Approx(ref.pressure).epsilon(1e-10));
        CHECK(mach(gas, plus) * mach(gas, plus) == doctest::Approx(ref.mach_sq).epsilon(1e-10));
        CHECK(plus.entropy_K > minus.entropy_K);
    }
}

TEST_CASE("both branches conserve mass flux and Bernoulli") {
    const InflowBackground in = nozzle();
    const BackgroundSolution bg(in, 1.5);
    const GasModel& gas = bg.gas();
    const double m = in.supersonic.mass_flux_m;
    for (double r : {1.0, 1.25, 1.5}) {
        const RadialProfile p = bg.upstream(r);
        CHECK(p.density * p.speed * r == doctest::Approx(m).epsilon(1e-12));
        CHECK(0.5 * p.speed * p.speed + gas.enthalpy_factor() * bg.upstream_entropy() * std::pow(p.density, 0.4) ==
              doctest::Approx(bg.bernoulli()).epsilon(1e-12));
        CHECK(p.mach_sq > 1.0);
    }
    for (double r : {1.5, 1.75, 2.0}) {
        const RadialProfile p = bg.downstream(r);
        CHECK(p.density * p.speed * r == doctest::Approx(m).epsilon(1e-12));
        CHECK(0.5 * p.speed * p.speed + gas.enthalpy_factor() * bg.downstream_entropy() * std::pow(p.density, 0.4) ==
              doctest::Approx(bg.bernoulli()).epsilon(1e-12));
        CHECK(p.mach_sq < 1.0);
    }
    for (double res : bg.jump_residual()) CHECK(std::abs(res) < 1e-12);
}

TEST_CASE("radial slopes agree with difference quotients") {
    const BackgroundSolution bg(nozzle(), 1.5);
    const double h = 1e-5;
    for (double r : {1.6, 1.9}) {
        const double fd = (bg.speed(r + h) - bg.speed(r - h)) / (2.0 * h);
        CHECK(bg.speed_slope(r) == doctest::Approx(fd).epsilon(1e-7));
        const RadialProfile p = bg.downstream(r);
        CHECK(p.pressure_slope == doctest::Approx((bg.pressure(r + h) - bg.pressure(r - h)) / (2.0 * h)).epsilon(1e-7));
    }
}

TEST_CASE("exit pressure is strictly monotone and invertible") {
    const InflowBackground in = nozzle();
    const auto [P1, P2] = admissible_exit_pressures(in);
    CHECK(P1 < P2);
    double last = 0.0;
    for (double rs : {1.1, 1.3, 1.5, 1.7, 1.9}) {
        const double pe = exit_pressure_of_shock(in, rs);
        if (last > 0.0) CHECK(pe < last);
        last = pe;
        CHECK(pe > P1);
        CHECK(pe < P2);
        CHECK(find_shock_radius(in, pe) == doctest::Approx(rs).epsilon(1e-10));
    }
    CHECK_THROWS_AS(find_shock_radius(in, 0.5 * P1), ExitPressureOutOfRange);
    CHECK_THROWS_AS(find_shock_radius(in, 2.0 * P2), ExitPressureOutOfRange);
}

TEST_CASE("shock-face constants") {
    const BackgroundSolution bg(nozzle(), 1.5);
    const BackgroundCoefficients c(bg);
    const RadialProfile plus = bg.downstream(1.5), minus = bg.upstream(1.5);
    const double g = bg.gas().gamma, M2 = plus.mach_sq;
    CHECK(c.pressure_jump == doctest::Approx(plus.pressure - minus.pressure).epsilon(1e-12));
    CHECK(c.a3 == doctest::Approx(((g - 1.0) * M2 + 1.0) / (g * M2)).epsilon(1e-12));
    CHECK(c.a4 == doctest::Approx(c.a0 * c.a1 * c.a3).epsilon(1e-12));
    CHECK(c.a0 == doctest::Approx(plus.density * plus.speed / c.pressure_jump).epsilon(1e-12));
    CHECK(c.ellipticity(1.7) == doctest::Approx(1.0 - bg.downstream(1.7).mach_sq).epsilon(1e-12));
    CHECK(c.ellipticity(1.7) > 0.0);
}

#include <doctest.h>

#include <cmath>

#include "transonic/rankine_hugoniot.hpp"

using namespace transonic;

namespace {

const GasModel gas{};
const InflowBackground inflow = make_inflow_background(gas, NozzleGeometry{}, InletState{});
const BackgroundSolution bg(inflow, 1.5);

// Oblique shock built from the normal-shock ratios applied to the normal
// velocity component; the tangential component passes unchanged.
FlowState oblique_plus(const FlowState& m, double grad_theta, double grad_z, double xi) {
    double n[3] = {1.0, -grad_theta / xi, -grad_z};
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (double& c : n) c /= len;
    const double u[3] = {m.u_r, m.u_theta, m.u_z};
    const double un = u[0] * n[0] + u[1] * n[1] + u[2] * n[2];
    const double g = gas.gamma, c2 = g * m.entropy_K * std::pow(m.density, g - 1.0);
    const double Mn2 = un * un / c2;
    const double ratio = (g + 1.0) * Mn2 / ((g - 1.0) * Mn2 + 2.0);
    const double P = m.entropy_K * std::pow(m.density, g) * (1.0 + 2.0 * g / (g + 1.0) * (Mn2 - 1.0));
    FlowState p;
    p.density = m.density * ratio;
    p.entropy_K = P / std::pow(p.density, g);
    const double dn = un / ratio - un;
    p.u_r = u[0] + dn * n[0];
    p.u_theta = u[1] + dn * n[1];
    p.u_z = u[2] + dn * n[2];
    return p;
}

FlowState upstream_state(double r) {
    const RadialProfile p = bg.upstream(r);
    return {p.speed, 0.0, 0.0, p.density, bg.upstream_entropy()};
}

}  // namespace

TEST_CASE("jump residual vanishes on the background normal shock") {
    const FlowState minus = upstream_state(1.5);
    const RadialProfile d = bg.downstream(1.5);
    const FlowState plus{d.speed, 0.0, 0.0, d.density, bg.downstream_entropy()};
    for (double r : rh_residual(gas, minus, plus, 0.0, 0.0, 1.5)) CHECK(std::abs(r) < 1e-12);
}

TEST_CASE("jump residual vanishes on oblique shocks from the normal-shock oracle") {
    FlowState minus = upstream_state(1.5);
    minus.u_theta = 0.05;
    minus.u_z = -0.08;
    for (auto [gt, gz] : {std::pair{0.1, 0.0}, std::pair{-0.05, 0.12}, std::pair{0.2, -0.1}}) {
        const FlowState plus = oblique_plus(minus, gt, gz, 1.52);
        const double P = pressure(gas, plus);
        for (double r : rh_residual(gas, minus, plus, gt, gz, 1.52)) CHECK(std::abs(r) < 1e-12 * P);
        // a wrong tilt breaks the tangential conditions
        const RHResidual off = rh_residual(gas, minus, plus, gt + 0.05, gz, 1.52);
        CHECK(std::abs(off[2]) + std::abs(off[0]) > 1e-4);
    }
}

TEST_CASE("closed-form and numeric shock rows agree") {
    const BackgroundCoefficients c(bg);
    const JumpAlgebra alg(c);
    const auto num = alg.numeric_rows();
    for (int q = 0; q < 3; ++q) {
        CHECK(num[0][q] == doctest::Approx(c.velocity_row()[q]).epsilon(1e-9));
        CHECK(num[1][q] == doctest::Approx(c.entropy_row()[q]).epsilon(1e-9));
    }
}

TEST_CASE("jump kernels vanish at the background and are quadratic in the perturbation") {
    const BackgroundCoefficients c(bg);
    const JumpAlgebra alg(c);
    ShockFacePoint p;
    p.minus = upstream_state(1.5);
    const JumpPoint z = alg.eval(p);
    for (double v : {z.g2, z.g3, z.R01, z.R02, z.R03, z.R1, z.R2}) CHECK(std::abs(v) < 1e-12);

    auto at = [&](double s) {
        ShockFacePoint q;
        q.v6 = 0.7 * s;
        // upstream held at the background
        q.minus = upstream_state(1.5 + q.v6);
        q.V = {0.5 * s, -0.2 * s, 0.6 * s, 0.1 * s, 0.0};
        return alg.eval(q);
    };
    const JumpPoint a = at(1e-2), b = at(1e-3);
    for (auto [x, y] : {std::pair{a.g2, b.g2}, std::pair{a.g3, b.g3}, std::pair{a.R01, b.R01}, std::pair{a.R02, b.R02}}) {
        REQUIRE(std::abs(y) > 0.0);
        CHECK(std::log10(std::abs(x / y)) > 1.9);
    }
}

TEST_CASE("shock update inverts the radial-velocity relation") {
    const BackgroundCoefficients c(bg);
    const JumpAlgebra alg(c);
    Field2 V1(3, 3, 0.02), R1(3, 3, 0.005);
    const Field2 v6 = update_shock(alg, V1, R1);
    CHECK(v6(1, 1) == doctest::Approx((0.02 - 0.005) / c.a1).epsilon(1e-14));
}

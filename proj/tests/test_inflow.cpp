#include <doctest.h>

#include <cmath>

#include "transonic/errors.hpp"
#include "transonic/inflow.hpp"

using namespace transonic;

namespace {

const NozzleGeometry geo{};
const InflowBackground bg = make_inflow_background(GasModel{}, geo, InletState{});

InflowMode mode(InflowVariable v, int k, int l, double a) {
    return {v, {k, l, a, required_angular_parity(v), required_axial_parity(v)}};
}

std::vector<InflowMode> sample_modes() {
    return {mode(InflowVariable::pressure, 1, 1, 1.0), mode(InflowVariable::angular_velocity, 2, 0, 0.5),
            mode(InflowVariable::axial_velocity, 0, 1, -0.4), mode(InflowVariable::entropy, 1, 2, 0.3),
            mode(InflowVariable::radial_velocity, 2, 1, 0.2)};
}

Axis angular_axis(int n) { return {-geo.half_angle, geo.half_angle, n}; }
Axis axial_axis(int n) { return {-geo.z_half, geo.z_half, n}; }

double max_perturbation(const SupersonicField& f) {
    double m = 0.0;
    for (const auto& d : f.perturbation()) m = std::max(m, max_abs(d));
    return m;
}

}  // namespace

TEST_CASE("wall parities are enforced on the inlet modes") {
    CHECK(required_angular_parity(InflowVariable::angular_velocity) == Parity::sine);
    CHECK(required_axial_parity(InflowVariable::axial_velocity) == Parity::sine);
    CHECK(required_angular_parity(InflowVariable::pressure) == Parity::cosine);
    InflowMode bad = mode(InflowVariable::pressure, 1, 1, 1.0);
    bad.shape.angular_parity = Parity::sine;
    CHECK_THROWS_AS(make_inlet(1e-3, {bad}, geo), IncompatibleMode);
    const InletPerturbation in = make_inlet(1e-3, sample_modes(), geo);
    // largest amplitude normalized to one
    CHECK(in.profile(InflowVariable::pressure, -geo.half_angle, -geo.z_half) == doctest::Approx(1.0));
    CHECK(in.profile(InflowVariable::angular_velocity, geo.half_angle, 0.3) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
}

TEST_CASE("unperturbed march reproduces the background") {
    const SupersonicField f = march_supersonic(bg, make_inlet(0.0, {}, geo), angular_axis(8), axial_axis(8), {32});
    CHECK(max_perturbation(f) < 1e-12);
    const FlowState s = f.eval(1.37, 0.1, -0.2);
    const RadialBranch& b = bg.supersonic;
    const BranchPoint p = solve_branch(bg.gas, b.mass_flux_m, b.B, b.K, 1.37, Branch::supersonic);
    CHECK(s.u_r == doctest::Approx(p.speed).epsilon(1e-12));
    CHECK(s.density == doctest::Approx(p.density).epsilon(1e-12));
}

TEST_CASE("march starts from the inlet data and responds linearly to small amplitudes") {
    const Axis a2 = angular_axis(16), a3 = axial_axis(16);
    const SupersonicField f1 = march_supersonic(bg, make_inlet(1e-4, sample_modes(), geo), a2, a3, {32});
    const SupersonicField f2 = march_supersonic(bg, make_inlet(2e-4, sample_modes(), geo), a2, a3, {32});
    // inlet axial velocity equals eps times its profile
    const InletPerturbation in = make_inlet(1e-4, sample_modes(), geo);
    for (int j = 0; j < a2.nodes(); j += 5)
        for (int k = 0; k < a3.nodes(); k += 5)
            CHECK(f1.node(0, j, k).u_z ==
                  doctest::Approx(1e-4 * in.profile(InflowVariable::axial_velocity, a2.x(j), a3.x(k))).epsilon(1e-10).scale(1e-4));
    double nonlinear = 0.0;
    for (int v = 0; v < 5; ++v)
        for (std::size_t n = 0; n < f1.perturbation()[v].size(); ++n)
            nonlinear = std::max(nonlinear, std::abs(f2.perturbation()[v][n] - 2.0 * f1.perturbation()[v][n]));
    CHECK(max_perturbation(f1) > 1e-5);
    CHECK(nonlinear < 1e-2 * max_perturbation(f1));
}

TEST_CASE("march keeps the wall compatibility and conservation to truncation") {
    auto run = [](int n) {
        return march_supersonic(bg, make_inlet(1e-3, sample_modes(), geo), angular_axis(n), axial_axis(n), {4 * n})
            .diagnostics;
    };
    const MarchDiagnostics c = run(8), f = run(16);
    CHECK(f.angular_wall_value < 1e-14);
    CHECK(f.axial_wall_value < 1e-14);
    CHECK(f.angular_wall_slope < c.angular_wall_slope);
    CHECK(f.euler_residual < 0.5 * c.euler_residual);
    CHECK(f.min_mach > 1.2);
}

TEST_CASE("frozen field holds the inlet profiles along r") {
    const Axis a2 = angular_axis(8), a3 = axial_axis(8);
    const InletPerturbation in = make_inlet(1e-3, sample_modes(), geo);
    const SupersonicField f = frozen_supersonic(bg, in, a2, a3, 16);
    const FlowState s = f.node(7, 3, 5), s0 = f.node(0, 3, 5);
    const double r = f.radial().x(7);
    const BranchPoint p = solve_branch(bg.gas, bg.supersonic.mass_flux_m, bg.supersonic.B, bg.supersonic.K, r,
                                       Branch::supersonic);
    CHECK(s.u_theta == doctest::Approx(s0.u_theta).epsilon(1e-14));
    CHECK(s.u_r - p.speed == doctest::Approx(1e-3 * in.profile(InflowVariable::radial_velocity, a2.x(3), a3.x(5))).epsilon(1e-12));
    CHECK_THROWS_AS(f.eval(0.5, 0.0, 0.0), OutOfDomain);
}

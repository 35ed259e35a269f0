#include <doctest.h>

#include <cmath>

#include "transonic/config.hpp"
#include "transonic/errors.hpp"
#include "transonic/fixed_point.hpp"
#include "transonic/verification.hpp"

using namespace transonic;

namespace {

RunConfig small(double eps) {
    RunConfig c = RunConfig::defaults();
    c.eps = eps;
    c.grid = {8, 8, 8, 6, 6, 16};
    return c;
}

}  // namespace

TEST_CASE("zero data is a fixed point reached in one step") {
    const RunConfig c = small(0.0);
    const Problem p = config_problem(c);
    const RunReport r = iterate(p, config_iteration(c));
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    for (const auto& v : r.solution.V) CHECK(max_abs(v) < 1e-12);
    CHECK(max_abs(r.solution.shock.value) < 1e-12);
    CHECK(r.verification.rh_max < 1e-12);
}

TEST_CASE("small data converge geometrically to a verified solution") {
    const RunConfig c = small(1e-3);
    const Problem p = config_problem(c);
    const RunReport r = iterate(p, config_iteration(c));
    REQUIRE(r.converged);
    CHECK(r.iterations <= 15);
    for (std::size_t n = 2; n < r.history.size(); ++n) CHECK(r.history[n].ratio < 0.5);
    CHECK(r.verification.rh_max < 1e-10);
    CHECK(r.verification.fixed_point_residual <= c.solver.fixed_point_tolerance);
    CHECK(max_abs(r.solution.shock.value) > 0.0);
    for (const auto& [name, item] : r.verification.compatibility) {
        INFO(name);
        CHECK(item.pass());
    }
}

TEST_CASE("norm surrogates are homogeneous and blend interpolates") {
    const RunConfig c = small(1e-3);
    const Problem p = config_problem(c);
    const NormScales s = NormScales::of(p);
    PerturbationField a = PerturbationField::zero(p.box), b = PerturbationField::zero(p.box);
    CHECK(w_norm(p.box, a, s) == 0.0);
    for (std::size_t n = 0; n < p.box.size(); ++n) b.V[0][n] = 1e-3 * std::sin(double(n));
    b.shock = ShockSurface::from_values(p.box, Field2(p.box, 2e-4));
    const double w = w_norm(p.box, b, s);
    CHECK(w > 0.0);
    CHECK(x_norm(p.box, b, s) >= w);
    const PerturbationField half = blend(a, b, 0.5);
    CHECK(w_norm(p.box, half, s) == doctest::Approx(0.5 * w).epsilon(1e-12));
    CHECK(w_norm(p.box, difference(b, half), s) == doctest::Approx(0.5 * w).epsilon(1e-12));
}

TEST_CASE("trust radius breach ends the run with its error kind") {
    RunConfig c = small(1e-3);
    const Problem p = config_problem(c);
    IterationOptions opt = config_iteration(c);
    const RunReport ok = iterate(p, opt, false);
    REQUIRE(ok.converged);
    // a problem claiming much smaller data has a much smaller trust radius
    const Problem tight(p.box, c.grid.angular_modes, c.grid.axial_modes, p.inflow, p.background.shock_radius(), p.minus,
                        p.exit_perturbation, p.eps, 1e-6 * p.data_norm);
    const RunReport r = iterate(tight, opt, false);
    CHECK_FALSE(r.converged);
    CHECK(r.failure_kind == "TrustRadiusExceeded");
    CHECK(error_kind(SolvabilityViolation("x")) == "SolvabilityViolation");
}

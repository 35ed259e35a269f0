#include <doctest.h>

#include <cmath>
#include <numbers>

#include "transonic/transport.hpp"

using namespace transonic;

namespace {

Box make_box(int n) { return Box::make(1.5, 2.0, std::numbers::pi / 6.0, 1.0, n, n, n); }

}  // namespace

TEST_CASE("linear slope field matches the exponential flow") {
    const Box box = make_box(16);
    Field3 K2(box), K3(box);
    const double a = 0.8, b = 0.5;
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                K2(i, j, k) = a * box.angular.x(j);
                K3(i, j, k) = b * box.axial.x(k);
            }
    const CharacteristicField ch = trace_characteristics(box, K2, K3);
    double e = 0.0;
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j) {
            const double L = box.radial.x(i) - box.radial.lo;
            e = std::max(e, std::abs(ch.foot2(i, j, 3) - box.angular.x(j) * std::exp(-a * L)));
            e = std::max(e, std::abs(ch.foot3(i, 3, j) - box.axial.x(j) * std::exp(-b * L)));
        }
    CHECK(e < 1e-7);
    CHECK(ch.max_excursion == doctest::Approx(0.0));
}

TEST_CASE("damped transport solves the linear ODE along characteristics") {
    const Box box = make_box(8);
    const double mu = 1.3, src = 0.4, R6 = 0.25;
    const Field3 zero(box), damping(box, mu), source(box, src);
    const CharacteristicField ch = trace_characteristics(box, zero, zero, &damping, &source);
    const Field3 w = transport_vorticity(ch, box, Field2(box, R6));
    for (int i = 0; i < box.nr(); ++i) {
        const double L = box.radial.x(i) - box.radial.lo, decay = std::exp(-mu * L);
        CHECK(w(i, 2, 5) == doctest::Approx(R6 * decay + src * (1.0 - decay) / mu).epsilon(1e-9));
    }
}

TEST_CASE("entropy and Bernoulli transport of the background are trivial") {
    const Box box = make_box(8);
    const InflowBackground in = make_inflow_background(GasModel{}, NozzleGeometry{}, InletState{});
    const BackgroundSolution bg(in, 1.5);
    const BackgroundCoefficients c(bg);
    const SupersonicField minus = frozen_supersonic(in, make_inlet(0.0, {}, in.geometry), box.angular, box.axial, 16);
    const Field3 zero(box);
    const CharacteristicField ch = trace_characteristics(box, zero, zero);
    const ShockSurface flat = ShockSurface::zero(box);
    CHECK(max_abs(transport_bernoulli(ch, box, minus, bg, flat)) < 1e-12);
    CHECK(max_abs(entropy_remainder(ch, box, c, flat, Field2(box), Field2(box))) < 1e-14);
    const Field3 V4 = transport_entropy(box, c, Field2(box, 0.01), Field3(box));
    CHECK(V4(3, 2, 2) == doctest::Approx(c.a2 / c.a1 * 0.01).epsilon(1e-14));
}

#include <doctest.h>

#include <cmath>

#include "transonic/errors.hpp"
#include "transonic/gas.hpp"

using namespace transonic;

TEST_CASE("pressure, sound speed and Bernoulli follow the polytropic law") {
    const GasModel gas{1.4, 1.0};
    const FlowState s{0.8, 0.1, -0.2, 1.3, 0.9};
    CHECK(pressure(gas, s) == doctest::Approx(0.9 * std::pow(1.3, 1.4)).epsilon(1e-14));
    CHECK(sound_speed_sq(gas, s) == doctest::Approx(1.4 * 0.9 * std::pow(1.3, 0.4)).epsilon(1e-14));
    const double q = 0.64 + 0.01 + 0.04;
    CHECK(bernoulli(gas, s) == doctest::Approx(0.5 * q + 3.5 * 0.9 * std::pow(1.3, 0.4)).epsilon(1e-14));
    CHECK(mach(gas, s) == doctest::Approx(std::sqrt(q / sound_speed_sq(gas, s))).epsilon(1e-14));
}

TEST_CASE("density from Bernoulli inverts the Bernoulli law") {
    const GasModel gas{1.4, 1.0};
    for (double rho : {0.2, 1.0, 2.7}) {
        const FlowState s{1.1, 0.3, 0.0, rho, 1.7};
        const double B = bernoulli(gas, s);
        CHECK(density_from_bernoulli(gas, B, 1.7, s.speed_sq()) == doctest::Approx(rho).epsilon(1e-12));
    }
    CHECK_THROWS_AS(density_from_bernoulli(gas, 1.0, 1.0, 2.0), VacuumBracket);
}

TEST_CASE("flow regime classification") {
    CHECK(classify(0.5) == FlowRegime::subsonic);
    CHECK(classify(1.0) == FlowRegime::sonic);
    CHECK(classify(1.0 + 1e-12) == FlowRegime::sonic);
    CHECK(classify(1.5) == FlowRegime::supersonic);
}

#include <doctest.h>

#include <cmath>

#include "manufactured.hpp"

using namespace transonic;
using namespace manufactured;

TEST_CASE("Pi solver converges on a manufactured potential") {
    const double e1 = pi_error(16), e2 = pi_error(32);
    CHECK(e2 < 1e-5);
    CHECK(std::log2(e1 / e2) > 3.5);
}

TEST_CASE("div-curl solver converges on a manufactured divergence-free field") {
    const double e1 = div_curl_error(16), e2 = div_curl_error(32);
    CHECK(e2 < 1e-2);
    CHECK(std::log2(e1 / e2) > 1.8);
}

TEST_CASE("potential solver converges with the oblique and nonlocal terms") {
    for (auto [k, l] : {std::pair{0, 0}, std::pair{2, 1}, std::pair{0, 3}}) {
        const PotentialError p1 = potential_error(16, k, l), p2 = potential_error(32, k, l);
        const double e1 = p1.error, e2 = p2.error;
        CHECK(p2.min_closure > 1e-3);
        CHECK(e2 < 1e-5);
        CHECK(std::log2(e1 / e2) > 3.5);
    }
}

TEST_CASE("shock-face Poisson data have zero mean and the modal solution") {
    const Setup s(8);
    Field2 q(s.box);
    const double kap = s.basis.angular_wavenumber(1), lam = s.basis.axial_wavenumber(2);
    for (int j = 0; j < s.box.nt(); ++j)
        for (int k = 0; k < s.box.nz(); ++k)
            q(j, k) = 0.5 + std::cos(kap * (s.box.angular.x(j) - s.box.angular.lo)) *
                                std::cos(lam * (s.box.axial.x(k) - s.box.axial.lo));
    const ShockPoisson sp = s.solver.solve_m1(q);
    CHECK(std::abs(sp.m1_integral) < 1e-12);
    CHECK(sp.modes(1, 2) == doctest::Approx(-coeffs.a3 / (kap * kap / 2.25 + lam * lam)).epsilon(1e-12));
    CHECK(sp.modes(0, 0) == 0.0);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "transonic/errors.hpp"
#include "transonic/geometry.hpp"

using namespace transonic;

namespace {

constexpr double theta0 = std::numbers::pi / 6.0;

Box make_box(int n) { return Box::make(1.5, 2.0, theta0, 1.0, n, n, n); }

// a shock offset even about both walls
ShockSurface bumped(const Box& box, double amp) {
    Field2 v(box);
    for (int j = 0; j < box.nt(); ++j)
        for (int k = 0; k < box.nz(); ++k)
            v(j, k) = amp * std::cos(std::numbers::pi * box.angular.x(j) / theta0) *
                      (1.0 + std::cos(std::numbers::pi * box.axial.x(k)));
    return ShockSurface::from_values(box, v);
}

double phys(double r, double th, double z) { return r * r * std::cos(th) + std::sin(z) * r; }
std::array<double, 3> phys_grad(double r, double th, double z) {
    return {2.0 * r * std::cos(th) + std::sin(z), -r * std::sin(th), std::cos(z) * r};
}

double gradient_error(int n) {
    const Box box = make_box(n);
    const ShockSurface s = bumped(box, 0.02);
    const TransformOps ops(box, s);
    Field3 f(box);
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k)
                f(i, j, k) = phys(ops.radius()(i, j, k), box.angular.x(j), box.axial.x(k));
    const Gradient g = ops.gradient(f);
    double e = 0.0;
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                const auto ex = phys_grad(ops.radius()(i, j, k), box.angular.x(j), box.axial.x(k));
                e = std::max({e, std::abs(g.d1(i, j, k) - ex[0]), std::abs(g.d2(i, j, k) - ex[1]),
                              std::abs(g.d3(i, j, k) - ex[2])});
            }
    return e;
}

}  // namespace

TEST_CASE("the shock-fitting map sends the shock face to the fitted surface") {
    const Box box = make_box(8);
    CHECK(to_physical(box, 1.5, 0.03) == doctest::Approx(1.53));
    CHECK(to_physical(box, 2.0, 0.03) == doctest::Approx(2.0));
    for (double y1 : {1.5, 1.62, 1.9})
        CHECK(to_fixed(box, to_physical(box, y1, -0.02), -0.02) == doctest::Approx(y1).epsilon(1e-14));
    CHECK_THROWS_AS(to_fixed(box, 1.4, 0.0), OutOfDomain);
    const ShockSurface s = bumped(box, 0.01);
    const Point3 y{1.7, 0.1, -0.3};
    const Point3 back = to_fixed(box, s, to_physical(box, s, y));
    for (int a = 0; a < 3; ++a) CHECK(back[a] == doctest::Approx(y[a]).epsilon(1e-13));
}

TEST_CASE("shock gradient tables follow the values") {
    const Box box = make_box(32);
    const ShockSurface s = bumped(box, 0.01);
    const double w = std::numbers::pi / theta0;
    double e = 0.0;
    for (int j = 0; j < box.nt(); ++j)
        for (int k = 0; k < box.nz(); ++k) {
            const double th = box.angular.x(j), z = box.axial.x(k);
            e = std::max(e, std::abs(s.grad2(j, k) + 0.01 * w * std::sin(w * th) * (1.0 + std::cos(std::numbers::pi * z))));
        }
    CHECK(e < 1e-5);
}

TEST_CASE("shock-fitted derivatives recover physical gradients at fourth order") {
    const double e1 = gradient_error(8), e2 = gradient_error(16);
    CHECK(e2 < 2e-3);
    CHECK(std::log2(e1 / e2) > 3.5);
}

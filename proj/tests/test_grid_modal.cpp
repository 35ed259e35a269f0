#include <doctest.h>

#include <cmath>
#include <numbers>

#include "transonic/grid.hpp"
#include "transonic/modal.hpp"

using namespace transonic;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> sample(const Axis& a, double (*f)(double)) {
    std::vector<double> v(a.nodes());
    for (int i = 0; i < a.nodes(); ++i) v[i] = f(a.x(i));
    return v;
}

double max_error(const std::vector<double>& got, const Axis& a, double (*exact)(double)) {
    double e = 0.0;
    for (int i = 0; i < a.nodes(); ++i) e = std::max(e, std::abs(got[i] - exact(a.x(i))));
    return e;
}

double f_exp(double x) { return std::exp(std::sin(2.0 * x)); }
double f_exp_d(double x) { return 2.0 * std::cos(2.0 * x) * f_exp(x); }
double f_exp_dd(double x) {
    return (4.0 * std::cos(2.0 * x) * std::cos(2.0 * x) - 4.0 * std::sin(2.0 * x)) * f_exp(x);
}

// observed order of a derivative operator between n and 2n intervals
template <class Op>
double observed_order(Op op, double (*exact)(double), int n) {
    const Axis a{0.0, 1.0, n}, b{0.0, 1.0, 2 * n};
    const double ea = max_error(op(sample(a, f_exp), a.step()), a, exact);
    const double eb = max_error(op(sample(b, f_exp), b.step()), b, exact);
    return std::log2(ea / eb);
}

}  // namespace

TEST_CASE("difference operators reach their design order") {
    auto d2 = [](const std::vector<double>& f, double h) { return diff(f, h); };
    auto dd2 = [](const std::vector<double>& f, double h) { return diff2(f, h); };
    auto d4 = [](const std::vector<double>& f, double h) { return diff4(f, h); };
    auto dd4 = [](const std::vector<double>& f, double h) { return diff4_second(f, h); };
    CHECK(observed_order(d2, f_exp_d, 32) > 1.9);
    CHECK(observed_order(dd2, f_exp_dd, 32) > 1.8);
    CHECK(observed_order(d4, f_exp_d, 32) > 3.8);
    CHECK(observed_order(dd4, f_exp_dd, 32) > 3.7);
}

TEST_CASE("parity-reflected differences stay fourth order up to the walls") {
    const double L = 2.0;
    auto err = [&](int n, Parity p) {
        const Axis a{-1.0, 1.0, n};
        Field2 f(a.nodes(), 3);
        for (int j = 0; j < a.nodes(); ++j)
            for (int k = 0; k < 3; ++k) {
                const double s = a.x(j) + 1.0;
                f(j, k) = p == Parity::cosine ? std::cos(pi * s / L) + 0.3 * std::cos(3.0 * pi * s / L)
                                              : std::sin(pi * s / L) - 0.2 * std::sin(2.0 * pi * s / L);
            }
        const Field2 d = diff4(f, 0, a.step(), p);
        double e = 0.0;
        for (int j = 0; j < a.nodes(); ++j) {
            const double s = a.x(j) + 1.0, w = pi / L;
            const double exact = p == Parity::cosine
                                     ? -w * std::sin(w * s) - 0.9 * w * std::sin(3.0 * w * s)
                                     : w * std::cos(w * s) - 0.4 * w * std::cos(2.0 * w * s);
            e = std::max(e, std::abs(d(j, 1) - exact));
        }
        return e;
    };
    for (Parity p : {Parity::cosine, Parity::sine}) CHECK(std::log2(err(16, p) / err(32, p)) > 3.8);
}

TEST_CASE("trapezoid integration and cubic interpolation") {
    const Axis a2{-0.5, 0.5, 20}, a3{-1.0, 1.0, 20};
    Field2 one(a2.nodes(), a3.nodes(), 1.0);
    CHECK(integrate(one, a2, a3) == doctest::Approx(2.0).epsilon(1e-14));
    Field2 cubic(a2.nodes(), a3.nodes());
    auto poly = [](double y, double z) { return 1.0 + y - 2.0 * y * y * y + z * z * z - y * z; };
    for (int j = 0; j < a2.nodes(); ++j)
        for (int k = 0; k < a3.nodes(); ++k) cubic(j, k) = poly(a2.x(j), a3.x(k));
    for (double y : {-0.49, 0.013, 0.37})
        for (double z : {-0.99, 0.25, 0.8})
            CHECK(interpolate(cubic, a2, a3, y, z) == doctest::Approx(poly(y, z)).epsilon(1e-12));
}

TEST_CASE("modal transform reproduces fields in the span") {
    const Box box = Box::make(1.5, 2.0, pi / 6.0, 1.0, 4, 16, 16);
    const ModalBasis basis(box, 12, 12);
    const double w2 = pi / (2.0 * box.angular.hi), w3 = pi / (2.0 * box.axial.hi);
    CHECK(basis.angular_wavenumber(3) == doctest::Approx(3.0 * w2));
    CHECK(basis.axial_wavenumber(2) == doctest::Approx(2.0 * w3));
    for (Parity p2 : {Parity::cosine, Parity::sine})
        for (Parity p3 : {Parity::cosine, Parity::sine}) {
            auto fam = [](Parity p, int k, double s, double w) { return p == Parity::cosine ? std::cos(k * w * s) : std::sin(k * w * s); };
            Field2 f(box);
            for (int j = 0; j < box.nt(); ++j)
                for (int k = 0; k < box.nz(); ++k) {
                    const double s2 = box.angular.x(j) - box.angular.lo, s3 = box.axial.x(k) - box.axial.lo;
                    f(j, k) = 0.7 * fam(p2, 1, s2, w2) * fam(p3, 2, s3, w3) - 0.2 * fam(p2, 5, s2, w2) * fam(p3, 3, s3, w3);
                }
            const ModalCoefficients c = basis.transform(f, p2, p3);
            const Field2 back = basis.inverse(c, p2, p3);
            for (std::size_t n = 0; n < f.size(); ++n) CHECK(back.values()[n] == doctest::Approx(f.values()[n]).epsilon(1e-12).scale(1.0));
            CHECK(std::abs(c(1, 2)) == doctest::Approx(0.7).epsilon(1e-12));
            CHECK(std::abs(c(5, 3)) == doctest::Approx(0.2).epsilon(1e-12));
        }
}

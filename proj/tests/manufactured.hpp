#pragma once

// Manufactured solutions for the three radial elliptic solvers: each returns
// the max nodal error against the exact field for a given radial resolution.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "transonic/elliptic.hpp"

namespace manufactured {

using namespace transonic;

constexpr double pi = std::numbers::pi;
inline const InflowBackground inflow = make_inflow_background(GasModel{}, NozzleGeometry{}, InletState{});
inline const BackgroundSolution bg(inflow, 1.5);
inline const BackgroundCoefficients coeffs(bg);

struct Setup {
    Box box;
    ModalBasis basis;
    EllipticSolver solver;
    explicit Setup(int nr) : box(Box::make(1.5, 2.0, pi / 6.0, 1.0, nr, 8, 8)), basis(box, 6, 6), solver(box, basis, coeffs) {}
};

inline double fam(Parity p, double w, double s) { return p == Parity::cosine ? std::cos(w * s) : std::sin(w * s); }

// radial profile times one tensor mode, on the box nodes
template <class R>
Field3 mode_field(const Setup& s, R radial, Parity p2, int k, Parity p3, int l) {
    Field3 f(s.box);
    const double w2 = s.basis.angular_wavenumber(k), w3 = s.basis.axial_wavenumber(l);
    for (int i = 0; i < s.box.nr(); ++i)
        for (int j = 0; j < s.box.nt(); ++j)
            for (int q = 0; q < s.box.nz(); ++q)
                f(i, j, q) = radial(s.box.radial.x(i)) * fam(p2, w2, s.box.angular.x(j) - s.box.angular.lo) *
                             fam(p3, w3, s.box.axial.x(q) - s.box.axial.lo);
    return f;
}

constexpr int K = 2, L = 1;

inline double pi_error(int nr) {
    const Setup s(nr);
    const double kap = s.basis.angular_wavenumber(K), lam = s.basis.axial_wavenumber(L);
    auto p = [](double r) { return r * std::sin(2.0 * pi * (r - 1.5)); };
    auto dp = [](double r) { return std::sin(2.0 * pi * (r - 1.5)) + 2.0 * pi * r * std::cos(2.0 * pi * (r - 1.5)); };
    const Field3 G1 = mode_field(s, dp, Parity::sine, K, Parity::sine, L);
    const Field3 G2 = mode_field(s, [&](double r) { return kap * p(r) / r; }, Parity::cosine, K, Parity::sine, L);
    const Field3 G3 = mode_field(s, [&](double r) { return lam * p(r); }, Parity::sine, K, Parity::cosine, L);
    const PiSolution sol = s.solver.solve_pi(G1, G2, G3);
    const Field3 exact = mode_field(s, p, Parity::sine, K, Parity::sine, L);
    double e = 0.0;
    for (std::size_t n = 0; n < exact.size(); ++n) e = std::max(e, std::abs(sol.pi[n] - exact[n]));
    return e;
}

struct DivCurlExact {
    static double a(double r) { return std::sin(2.0 * pi * (r - 1.5)); }
    static double da(double r) { return 2.0 * pi * std::cos(2.0 * pi * (r - 1.5)); }
    static double d(double r) { return std::cos(r); }
    static double dd(double r) { return -std::sin(r); }
};

inline double div_curl_error(int nr) {
    const Setup s(nr);
    const double kap = s.basis.angular_wavenumber(K), lam = s.basis.axial_wavenumber(L);
    using E = DivCurlExact;
    // divergence-free: a' + a/r + kap b/r + lam d = 0
    auto b = [&](double r) { return -(r * E::da(r) + E::a(r) + lam * r * E::d(r)) / kap; };
    auto db = [&](double r) {
        const double h = 1e-5;
        return (b(r + h) - b(r - h)) / (2.0 * h);
    };
    PiSolution pi;
    const int nr1 = s.box.nr();
    pi.modes = zero_modes(s.basis, nr1);
    pi.reduced1 = pi.reduced2 = pi.reduced3 = zero_modes(s.basis, nr1);
    for (int i = 0; i < nr1; ++i) {
        const double r = s.box.radial.x(i);
        pi.reduced1[i](K, L) = lam * b(r) - kap * E::d(r) / r;
        pi.reduced2[i](K, L) = -lam * E::a(r) - E::dd(r);
        pi.reduced3[i](K, L) = db(r) + b(r) / r + kap * E::a(r) / r;
    }
    const DivCurlSolution sol = s.solver.solve_div_curl(pi);
    double e = 0.0;
    for (int i = 0; i < nr1; ++i) {
        const double r = s.box.radial.x(i);
        e = std::max({e, std::abs(sol.a[i](K, L) - E::a(r)), std::abs(sol.b[i](K, L) - b(r)),
                      std::abs(sol.d[i](K, L) - E::d(r))});
    }
    return e;
}

struct PotentialError {
    double error, min_closure;
};

inline PotentialError potential_error(int nr, int k, int l) {
    const Setup s(nr);
    const double kap = s.basis.angular_wavenumber(k), lam = s.basis.axial_wavenumber(l);
    auto X = [](double r) { return std::cos(3.0 * r) + 0.3 * r * r; };
    auto dX = [](double r) { return -3.0 * std::sin(3.0 * r) + 0.6 * r; };
    auto ddX = [](double r) { return -9.0 * std::cos(3.0 * r) + 0.6; };
    RadialModes G5 = zero_modes(s.basis, s.box.nr());
    const double ab = coeffs.a0 * coeffs.a1;
    for (int i = 0; i < s.box.nr(); ++i) {
        const double r = s.box.radial.x(i), c = kap * kap / (r * r) + lam * lam;
        G5[i](k, l) = s.solver.ellipticity()[i] * ddX(r) + s.solver.drift()[i] * dX(r) - c * X(r) -
                      ab * s.solver.nonlocal()[i] * X(1.5);
    }
    ModalCoefficients m1 = ModalCoefficients::Zero(6, 6), m2 = m1;
    m1(k, l) = dX(1.5) - coeffs.a4 * X(1.5);
    m2(k, l) = dX(2.0);
    const PotentialSolution sol = s.solver.solve_potential_modes(G5, m1, m2);
    double e = 0.0;
    for (int i = 0; i < s.box.nr(); ++i) e = std::max(e, std::abs(sol.X[i](k, l) - X(s.box.radial.x(i))));
    return {e, sol.min_closure};
}

}  // namespace manufactured

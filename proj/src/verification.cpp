#include "transonic/verification.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "transonic/parallel.hpp"

namespace transonic {

double EquationResiduals::euler_max() const { return *std::max_element(euler.begin(), euler.end()); }

double EquationResiduals::decomposed_max() const {
    double m = 0.0;
    for (const auto& [name, v] : decomposed) m = std::max(m, v);
    return m;
}

EquationResiduals equation_residuals(const Problem& p, const PerturbationField& f) {
    const Box& box = p.box;
    const BackgroundSolution& bg = p.background;
    const GasModel& gas = bg.gas();
    const double g = gas.gamma, B = bg.bernoulli(), K = bg.downstream_entropy();
    const double rs = bg.shock_radius();
    const TransformOps ops(box, f.shock);
    const BackgroundAtNodes bgn = BackgroundAtNodes::make(bg, ops.radius());
    const std::size_t N = box.size();

    // perturbations of the mass fluxes and of the pressure
    Field3 rho(box), dm1(box), m2(box), m3(box), dP(box);
    for (std::size_t n = 0; n < N; ++n) {
        const double U1 = bgn.speed[n] + f.V[0][n], U2 = f.V[1][n], U3 = f.V[2][n];
        const double q = U1 * U1 + U2 * U2 + U3 * U3;
        const double Kn = K + f.V[3][n];
        rho[n] = density_from_bernoulli(gas, B + f.V[4][n], Kn, q);
        dm1[n] = rho[n] * U1 - bgn.density[n] * bgn.speed[n];
        m2[n] = rho[n] * U2;
        m3[n] = rho[n] * U3;
        dP[n] = Kn * std::pow(rho[n], g) - bgn.pressure[n];
    }
    // fourth-order differences keep the evaluation error below that of the solution
    // the wall symmetry of each quantity closes the cross-section stencils
    constexpr Parity even = Parity::cosine, odd = Parity::sine;
    std::array<Gradient, 5> D;
    for (int v = 0; v < 5; ++v) D[v] = ops.gradient(f.V[v], v == 1 ? odd : even, v == 2 ? odd : even);
    const Gradient Gm1 = ops.gradient(dm1, even, even), Gm2 = ops.gradient(m2, odd, even);
    const Gradient Gm3 = ops.gradient(m3, even, odd), GP = ops.gradient(dP, even, even);

    const double rho_s = bg.density(rs), U_s = bg.speed(rs), P_s = bg.pressure(rs), c2_s = bg.sound_sq(rs);
    const double sc_mass = rho_s * U_s / rs, sc_mom = P_s / rs, sc_K = U_s * K / rs;
    const double sc_B = B / rs, sc_Kt = K / rs, sc_vor = U_s / rs, sc_def = c2_s * U_s / rs;

    EquationResiduals out;
    double ber = 0.0, ent = 0.0, vor2 = 0.0, vor3 = 0.0, def = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        const double r = ops.radius()[n];
        const double Ub = bgn.speed[n], Up = bgn.speed_slope[n];
        const double U1 = Ub + f.V[0][n], U2 = f.V[1][n], U3 = f.V[2][n];
        const double Kn = K + f.V[3][n], Bn = B + f.V[4][n];
        const double q = U1 * U1 + U2 * U2 + U3 * U3;
        auto adv = [&](const Gradient& G) { return U1 * G.d1[n] + U2 * G.d2[n] + U3 * G.d3[n]; };
        const double c = Gm1.d1[n] + dm1[n] / r + Gm2.d2[n] + Gm3.d3[n];
        const double mr = dm1[n] * Up + rho[n] * (adv(D[0]) - U2 * U2 / r) + GP.d1[n];
        const double mt = rho[n] * (adv(D[1]) + U1 * U2 / r) + GP.d2[n];
        const double mz = rho[n] * adv(D[2]) + GP.d3[n];
        const double kt = adv(D[3]);
        const double e[5] = {c / sc_mass, mr / sc_mom, mt / sc_mom, mz / sc_mom, kt / sc_K};
        for (int q5 = 0; q5 < 5; ++q5) out.euler[q5] = std::max(out.euler[q5], std::abs(e[q5]));

        ber = std::max(ber, std::abs(adv(D[4]) / U1) / sc_B);
        ent = std::max(ent, std::abs(kt / U1) / sc_Kt);
        const double w1 = D[2].d2[n] - D[1].d3[n];
        const double w2 = D[0].d3[n] - D[2].d1[n];
        const double w3 = D[1].d1[n] - D[0].d2[n] + U2 / r;
        const double Z = (Bn - 0.5 * q) / (g * Kn * U1);
        vor2 = std::max(vor2, std::abs(w2 - (U2 * w1 + D[4].d3[n]) / U1 + Z * D[3].d3[n]) / sc_vor);
        vor3 = std::max(vor3, std::abs(w3 - (U3 * w1 - D[4].d2[n]) / U1 - Z * D[3].d2[n]) / sc_vor);
        const double c2 = (g - 1.0) * (Bn - 0.5 * q);
        const double lhs = (c2 - U1 * U1) * (Up + D[0].d1[n]) + (c2 - U2 * U2) * D[1].d2[n] +
                           (c2 - U3 * U3) * D[2].d3[n] + c2 * U1 / r;
        const double rhs = U1 * (U2 * D[1].d1[n] + U3 * D[2].d1[n]) + U2 * (U1 * D[0].d2[n] + U3 * D[2].d2[n]) +
                           U3 * (U1 * D[0].d3[n] + U2 * D[1].d3[n]);
        def = std::max(def, std::abs(lhs - rhs) / sc_def);
    }
    out.decomposed = {{"bernoulli_transport", ber},
                      {"entropy_transport", ent},
                      {"vorticity_axial_relation", vor2},
                      {"vorticity_swirl_relation", vor3},
                      {"deformation", def}};
    return out;
}

std::array<double, 5> shock_residuals(const Problem& p, const PerturbationField& f) {
    const Box& box = p.box;
    const BackgroundSolution& bg = p.background;
    const double rs = bg.shock_radius();
    const RadialProfile plus = bg.downstream(rs);
    const double scale[5] = {plus.density * plus.speed, plus.pressure, plus.pressure, plus.pressure,
                             bg.bernoulli()};
    std::array<double, 5> out{};
    for (int j = 0; j < box.nt(); ++j)
        for (int k = 0; k < box.nz(); ++k) {
            const double v6 = f.shock.value(j, k);
            std::array<double, 5> V;
            for (int v = 0; v < 5; ++v) V[v] = f.V[v](0, j, k);
            const FlowState minus = p.minus.eval(rs + v6, box.angular.x(j), box.axial.x(k));
            const FlowState state = p.jump.plus_state(V, v6);
            const RHResidual r =
                rh_residual(bg.gas(), minus, state, f.shock.grad2(j, k), f.shock.grad3(j, k), rs + v6);
            for (int q = 0; q < 5; ++q) out[q] = std::max(out[q], std::abs(r[q]) / scale[q]);
        }
    return out;
}

ShockGradientResiduals shock_gradient_residuals(const Problem& p, const PerturbationField& f,
                                                const FaceKernels& k) {
    const Box& box = p.box;
    const double rs = box.radial.lo, a0 = p.coeffs.a0, a1 = p.coeffs.a1;
    const double h2 = box.angular.step(), h3 = box.axial.step();
    const double U = p.background.speed(rs);
    const Field2 V1 = f.V[0].slice(0), V2 = f.V[1].slice(0), V3 = f.V[2].slice(0);
    constexpr Parity even = Parity::cosine, odd = Parity::sine;
    const Field2 V1_2 = diff4(V1, 0, h2, even), V1_3 = diff4(V1, 1, h3, even);
    const Field2 R1_2 = diff4(k.R1, 0, h2, even), R1_3 = diff4(k.R1, 1, h3, even);
    const Field2 v6_2 = diff(f.shock.value, 0, h2), v6_3 = diff(f.shock.value, 1, h3);
    Field2 F2(box), F3(box);
    ShockGradientResiduals out;
    for (std::size_t n = 0; n < F2.size(); ++n) {
        F2.values()[n] = (V1_2.values()[n] / rs - a0 * a1 * V2.values()[n] -
                          (a1 * k.g2.values()[n] + R1_2.values()[n] / rs)) / U;
        F3.values()[n] = (V1_3.values()[n] - a0 * a1 * V3.values()[n] - (a1 * k.g3.values()[n] + R1_3.values()[n])) / U;
        out.table2 = std::max(out.table2, std::abs(f.shock.grad2.values()[n] - v6_2.values()[n]) / rs);
        out.table3 = std::max(out.table3, std::abs(f.shock.grad3.values()[n] - v6_3.values()[n]));
    }
    out.F2 = max_abs(F2);
    out.F3 = max_abs(F3);
    const Field2 F2_2 = diff4(F2, 0, h2, odd), F2_3 = diff4(F2, 1, h3, even);
    const Field2 F3_2 = diff4(F3, 0, h2, even), F3_3 = diff4(F3, 1, h3, odd);
    for (std::size_t n = 0; n < F2.size(); ++n) {
        out.div = std::max(out.div, std::abs(F2_2.values()[n] / rs + F3_3.values()[n]));
        out.curl = std::max(out.curl, std::abs(F3_2.values()[n] / rs - F2_3.values()[n]));
    }
    for (int kk = 0; kk < box.nz(); ++kk)
        out.wall = std::max({out.wall, std::abs(F2(0, kk)), std::abs(F2(box.nt() - 1, kk))});
    for (int j = 0; j < box.nt(); ++j)
        out.wall = std::max({out.wall, std::abs(F3(j, 0)), std::abs(F3(j, box.nz() - 1))});
    return out;
}

namespace {

// Node distance to the nearer wall of an axis (Field3: 1 angular, 2 axial; Field2: 0 angular, 1 axial).
int wall_distance(std::size_t n, const Field3& f, int axis) {
    const int k = int(n % f.nz()), j = int((n / f.nz()) % f.nt());
    return axis == 1 ? std::min(j, f.nt() - 1 - j) : std::min(k, f.nz() - 1 - k);
}

int wall_distance(std::size_t n, const Field2& f, int axis) {
    const int k = int(n % f.nz()), j = int(n / f.nz());
    return axis == 0 ? std::min(j, f.nt() - 1 - j) : std::min(k, f.nz() - 1 - k);
}

bool wall3(std::size_t n, const Field3& f, int axis) { return wall_distance(n, f, axis) == 0; }

template <class F>
CompatibilityItem wall_probe(const F& f, int axis, double h, WallProbe probe) {
    // fourth derivative from centered stencils only, two or more nodes off the walls
    const F d4 = diff2(diff2(f, axis, h), axis, h);
    double d4_max = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n)
        if (wall_distance(n, f, axis) >= 2) d4_max = std::max(d4_max, std::abs(d4.values()[n]));
    const F g = probe == WallProbe::value ? f : (probe == WallProbe::slope ? diff(f, axis, h) : diff2(f, axis, h));
    double value = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n)
        if (wall_distance(n, f, axis) == 0) value = std::max(value, std::abs(g.values()[n]));
    const int order = probe == WallProbe::value ? 0 : (probe == WallProbe::slope ? 1 : 2);
    const double coef = probe == WallProbe::curvature ? 11.0 / 12.0 * h * h : 0.25 * h * h * h;
    CompatibilityItem item;
    item.value = value;
    item.tolerance = 10.0 * coef * d4_max + 1e-13 * max_abs(f) / std::pow(h, order);
    return item;
}

}  // namespace

CompatibilityItem wall_check(const Field3& f, int axis, double h, WallProbe probe) {
    return wall_probe(f, axis, h, probe);
}

CompatibilityItem wall_check(const Field2& f, int axis, double h, WallProbe probe) {
    return wall_probe(f, axis, h, probe);
}

double quadrature_tolerance(const Box& box, const Field2& q) {
    const double h2 = box.angular.step(), h3 = box.axial.step();
    const double area = box.angular.length() * box.axial.length();
    return area / 12.0 * (h2 * h2 * max_abs(diff2(q, 0, h2)) + h3 * h3 * max_abs(diff2(q, 1, h3)));
}

std::map<std::string, CompatibilityItem> compatibility_suite(const Problem& p, const PerturbationField& f,
                                                             const StepResult& last) {
    std::map<std::string, CompatibilityItem> out;
    const Box& box = p.box;
    const double h[3] = {box.radial.step(), box.angular.step(), box.axial.step()};
    const char* wall_name[3] = {"", "angular", "axial"};
    const char* var_name[5] = {"V1", "V2", "V3", "V4", "V5"};

    // subsonic iterate: the odd component vanishes with its second normal
    // derivative, the others have zero normal derivative
    for (int axis = 1; axis <= 2; ++axis) {
        const int odd = axis;  // V2 on angular walls, V3 on axial walls
        for (int v = 0; v < 5; ++v) {
            const std::string base = fmt::format("class2.{}.{}", var_name[v], wall_name[axis]);
            if (v == odd) {
                out[base + ".value"] = wall_check(f.V[v], axis, h[axis], WallProbe::value);
                out[base + ".curvature"] = wall_check(f.V[v], axis, h[axis], WallProbe::curvature);
            } else {
                out[base + ".slope"] = wall_check(f.V[v], axis, h[axis], WallProbe::slope);
            }
        }
        out[fmt::format("ber44.V5.{}", wall_name[axis])] = wall_check(f.V[4], axis, h[axis], WallProbe::slope);
        out[fmt::format("vor5041.omega.{}", wall_name[axis])] =
            wall_check(last.omega, axis, h[axis], WallProbe::value);
    }

    // shock surface: first and third normal derivatives at the walls
    const ShockSurface& s = f.shock;
    const CompatibilityItem s2 = wall_check(s.grad2, 0, h[1], WallProbe::value);
    const CompatibilityItem s3 = wall_check(s.grad3, 1, h[2], WallProbe::value);
    for (const char* tag : {"class2", "shock91"}) {
        out[fmt::format("{}.V6.angular.slope", tag)] = s2;
        out[fmt::format("{}.V6.axial.slope", tag)] = s3;
        out[fmt::format("{}.V6.angular.third", tag)] = wall_check(s.grad2, 0, h[1], WallProbe::curvature);
        out[fmt::format("{}.V6.axial.third", tag)] = wall_check(s.grad3, 1, h[2], WallProbe::curvature);
    }

    // supersonic field ahead of the shock, per station
    const SupersonicField& m = p.minus;
    const auto& delta = m.perturbation();
    const char* minus_name[5] = {"u_r", "u_theta", "u_z", "density", "K"};
    const double hm[3] = {m.radial().step(), m.angular().step(), m.axial().step()};
    for (int axis = 1; axis <= 2; ++axis)
        for (int v = 0; v < 5; ++v) {
            const std::string base = fmt::format("super5.{}.{}", minus_name[v], wall_name[axis]);
            if (v == axis) {
                out[base + ".value"] = wall_check(delta[v], axis, hm[axis], WallProbe::value);
                out[base + ".curvature"] = wall_check(delta[v], axis, hm[axis], WallProbe::curvature);
            } else {
                out[base + ".slope"] = wall_check(delta[v], axis, hm[axis], WallProbe::slope);
            }
        }

    // physical fields behind the shock: tangential derivatives at fixed radius
    const TransformOps ops(box, s);
    const BackgroundAtNodes bgn = BackgroundAtNodes::make(p.background, ops.radius());
    const GasModel& gas = p.background.gas();
    const double B = p.background.bernoulli(), K = p.background.downstream_entropy();
    Field3 phys[5] = {Field3(box), f.V[1], f.V[2], Field3(box), Field3(box)};
    const char* phys_name[5] = {"U1", "U2", "U3", "P", "K"};
    for (std::size_t n = 0; n < box.size(); ++n) {
        const double U1 = bgn.speed[n] + f.V[0][n];
        const double q = U1 * U1 + f.V[1][n] * f.V[1][n] + f.V[2][n] * f.V[2][n];
        const double Kn = K + f.V[3][n];
        const double rho = density_from_bernoulli(gas, B + f.V[4][n], Kn, q);
        phys[0][n] = U1;
        phys[3][n] = Kn * std::pow(rho, gas.gamma) - bgn.pressure[n];
        phys[4][n] = f.V[3][n];
    }
    for (int axis = 1; axis <= 2; ++axis) {
        const CompatibilityItem& tilt = axis == 1 ? s2 : s3;
        for (int v = 0; v < 5; ++v) {
            const std::string base = fmt::format("c1.{}.{}", phys_name[v], wall_name[axis]);
            const Gradient G = ops.gradient(phys[v]);
            const Field3 p1 = diff(phys[v], 0, h[0]);
            // the fitted tangential derivative differs from the box one by the shock tilt
            double tilt_scale = 0.0;
            for (int i = 0; i < box.nr(); ++i)
                for (int j = 0; j < box.nt(); ++j)
                    for (int k = 0; k < box.nz(); ++k)
                        tilt_scale = std::max(tilt_scale, std::abs(ops.shear(i, j, k) * p1(i, j, k)));
            if (v == axis) {
                out[base + ".value"] = wall_check(phys[v], axis, h[axis], WallProbe::value);
                const Field3 t = axis == 1 ? G.d2 : G.d3;
                Field3 tangential(box);
                for (std::size_t n = 0; n < box.size(); ++n) tangential[n] = axis == 1 ? t[n] * ops.radius()[n] : t[n];
                const Gradient G2 = ops.gradient(tangential);
                Field3 second(box);
                for (std::size_t n = 0; n < box.size(); ++n)
                    second[n] = axis == 1 ? G2.d2[n] * ops.radius()[n] : G2.d3[n];
                CompatibilityItem c = wall_check(phys[v], axis, h[axis], WallProbe::curvature);
                c.value = 0.0;
                for (std::size_t n = 0; n < box.size(); ++n)
                    if (wall3(n, second, axis)) c.value = std::max(c.value, std::abs(second[n]));
                const Field3 cross = diff(diff(phys[v], 0, h[0]), axis, h[axis]);
                c.tolerance += 2.0 * tilt.tolerance * max_abs(cross);
                out[base + ".curvature"] = c;
            } else {
                CompatibilityItem c = wall_check(phys[v], axis, h[axis], WallProbe::slope);
                c.value = 0.0;
                for (std::size_t n = 0; n < box.size(); ++n) {
                    if (!wall3(n, phys[v], axis)) continue;
                    const double d = axis == 1 ? G.d2[n] * ops.radius()[n] : G.d3[n];
                    c.value = std::max(c.value, std::abs(d));
                }
                c.tolerance += tilt.tolerance * tilt_scale;
                out[base + ".slope"] = c;
            }
        }
    }
    return out;
}

VerificationReport verify_solution(const Problem& p, const PerturbationField& f, const StepResult& last,
                                   double fixed_point_residual) {
    VerificationReport r;
    r.evaluated = true;
    r.rh = shock_residuals(p, f);
    r.rh_max = *std::max_element(r.rh.begin(), r.rh.end());
    const EquationResiduals e = equation_residuals(p, f);
    r.euler = e.euler;
    r.euler_max = e.euler_max();
    r.decomposed = e.decomposed;
    r.decomposed_max = e.decomposed_max();
    const ShockGradientResiduals sg = shock_gradient_residuals(p, f, last.kernels);
    r.shock_gradient_angular = sg.F2;
    r.shock_gradient_axial = sg.F3;
    r.pi_max = max_abs(last.pi.pi);
    r.q5_integral = last.shock_poisson.q5_integral;
    r.q5_quadrature_tolerance = quadrature_tolerance(p.box, last.q5);
    r.m1_integral = last.shock_poisson.m1_integral;
    r.fixed_point_residual = fixed_point_residual;
    r.compatibility = compatibility_suite(p, f, last);
    return r;
}

}  // namespace transonic

#include "transonic/rankine_hugoniot.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "transonic/errors.hpp"

namespace transonic {

RHResidual rh_residual(const GasModel& gas, const FlowState& m, const FlowState& p, double grad_theta, double grad_z,
                       double xi) {
    const double Pm = pressure(gas, m), Pp = pressure(gas, p);
    const double a = grad_theta / xi, b = grad_z;
    auto jump = [](double plus, double minus) { return plus - minus; };
    const double mass1 = jump(p.density * p.u_r, m.density * m.u_r);
    const double mass2 = jump(p.density * p.u_theta, m.density * m.u_theta);
    const double mass3 = jump(p.density * p.u_z, m.density * m.u_z);
    const double f11 = jump(p.density * p.u_r * p.u_r + Pp, m.density * m.u_r * m.u_r + Pm);
    const double f12 = jump(p.density * p.u_r * p.u_theta, m.density * m.u_r * m.u_theta);
    const double f13 = jump(p.density * p.u_r * p.u_z, m.density * m.u_r * m.u_z);
    const double f22 = jump(p.density * p.u_theta * p.u_theta + Pp, m.density * m.u_theta * m.u_theta + Pm);
    const double f23 = jump(p.density * p.u_theta * p.u_z, m.density * m.u_theta * m.u_z);
    const double f33 = jump(p.density * p.u_z * p.u_z + Pp, m.density * m.u_z * m.u_z + Pm);
    return {mass1 - a * mass2 - b * mass3, f11 - a * f12 - b * f13, f12 - a * f22 - b * f23, f13 - a * f23 - b * f33,
            bernoulli(gas, p) - bernoulli(gas, m)};
}

JumpAlgebra::JumpAlgebra(const BackgroundCoefficients& coeffs) : c_(coeffs) {
    const BackgroundSolution& bg = c_.background();
    gamma_ = bg.gas().gamma;
    rs_ = bg.shock_radius();
    B_ = bg.bernoulli();
    Kp_ = bg.downstream_entropy();
    plus_rs_ = bg.downstream(rs_);
    jumpP_ = c_.pressure_jump;

    const auto num = numeric_rows();
    const auto b1 = c_.velocity_row(), b2 = c_.entropy_row();
    for (int i = 0; i < 3; ++i) {
        const double e1 = std::abs(num[0][i] - b1[i]) / std::max(1.0, std::abs(b1[i]));
        const double e2 = std::abs(num[1][i] - b2[i]) / std::max(1.0, std::abs(b2[i]));
        if (e1 > 1e-12 || e2 > 1e-12) {
            throw SolverError(fmt::format("closed-form jump inversion disagrees with the numeric inverse ({:.3g}, {:.3g})",
                                          e1, e2));
        }
    }
}

std::array<std::array<double, 3>, 2> JumpAlgebra::numeric_rows() const {
    const auto M = shock_system_matrix(c_.background());
    Eigen::Matrix3d A;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = M[i][j];
    const Eigen::Matrix3d inv = A.fullPivLu().inverse();
    return {{{inv(0, 0), inv(0, 1), inv(0, 2)}, {inv(2, 0), inv(2, 1), inv(2, 2)}}};
}

std::array<double, 2> JumpAlgebra::density_pressure(const std::array<double, 5>& V, double r) const {
    const double U = c_.background().speed(r) + V[0];
    const double K = Kp_ + V[3];
    const double bracket = B_ + V[4] - 0.5 * U * U - 0.5 * (V[1] * V[1] + V[2] * V[2]);
    if (!(bracket > 0.0) || !(K > 0.0)) {
        throw VacuumBracket(fmt::format("vacuum bracket in the subsonic state: {:.6g}", bracket));
    }
    const double g = gamma_;
    const double rho = std::pow((g - 1.0) / (g * K) * bracket, 1.0 / (g - 1.0));
    return {rho, K * std::pow(rho, g)};
}

FlowState JumpAlgebra::plus_state(const std::array<double, 5>& V, double v6) const {
    const double xi = rs_ + v6;
    FlowState s;
    s.u_r = c_.background().speed(xi) + V[0];
    s.u_theta = V[1];
    s.u_z = V[2];
    s.density = density_pressure(V, xi)[0];
    s.entropy_K = Kp_ + V[3];
    return s;
}

JumpPoint JumpAlgebra::eval(const ShockFacePoint& pt) const {
    const BackgroundSolution& bg = c_.background();
    const double g = gamma_;
    const double xi = rs_ + pt.v6;
    const auto& V = pt.V;
    const RadialProfile up = bg.upstream(xi);
    const RadialProfile dn = bg.downstream(xi);
    const FlowState& m = pt.minus;
    const double Pm = pressure(bg.gas(), m);

    JumpPoint out;
    const auto [rho, P] = density_pressure(V, xi);
    out.density = rho;
    out.pressure = P;
    const double U1 = dn.speed + V[0];

    const double A22 = rho * V[1] * V[1] + P - (m.density * m.u_theta * m.u_theta + Pm);
    const double A33 = rho * V[2] * V[2] + P - (m.density * m.u_z * m.u_z + Pm);
    const double A23 = rho * V[1] * V[2] - m.density * m.u_theta * m.u_z;
    const double A12 = rho * U1 * V[1] - m.density * m.u_r * m.u_theta;
    const double A13 = rho * U1 * V[2] - m.density * m.u_r * m.u_z;
    out.J = A22 * A33 - A23 * A23;
    out.J2 = A33 * A12 - A13 * A23;
    out.J3 = A22 * A13 - A12 * A23;
    if (!(std::abs(out.J) >= 1e-8 * jumpP_ * jumpP_)) {
        throw DegenerateJ(fmt::format("tangential jump determinant {:.3g} below 1e-8 [P]^2", out.J));
    }
    const double t2 = out.J2 / out.J, t3 = out.J3 / out.J;
    out.g2 = (xi * t2 - c_.a0 * rs_ * V[1]) / rs_;
    out.g3 = t3 - c_.a0 * V[2];

    const double rho_s = plus_rs_.density, U_s = plus_rs_.speed, c2_s = plus_rs_.sound_sq;
    const double drho = rho - dn.density;
    const double mflux_bg_minus = up.density * up.speed;
    const double mom_bg_minus = up.density * up.speed * up.speed + up.pressure;
    const double mom_bg_plus = dn.density * dn.speed * dn.speed + dn.pressure;

    out.R01 = -(dn.density * dn.speed - mflux_bg_minus) + (m.density * m.u_r - mflux_bg_minus) -
              (V[0] + dn.speed - U_s) * drho + (rho * V[1] - m.density * m.u_theta) * t2 +
              (rho * V[2] - m.density * m.u_z) * t3 - (dn.density - rho_s) * V[0];

    const double lin2 = 2.0 * rho_s * U_s * V[0] + (U_s * U_s + c2_s) * drho + std::pow(rho_s, g) * V[3];
    out.R02 = -((mom_bg_plus - mom_bg_minus) - jumpP_ * pt.v6 / rs_) +
              (m.density * m.u_r * m.u_r + Pm - mom_bg_minus) - (rho * U1 * U1 + P - mom_bg_plus - lin2) +
              (rho * U1 * V[1] - m.density * m.u_r * m.u_theta) * t2 +
              (rho * U1 * V[2] - m.density * m.u_r * m.u_z) * t3;

    FlowState mbg;
    mbg.u_r = up.speed;
    mbg.density = up.density;
    mbg.entropy_K = bg.upstream_entropy();
    const double bern_excess = bernoulli(bg.gas(), m) - bernoulli(bg.gas(), mbg);
    const double h = g / (g - 1.0);
    out.R03 = bern_excess - dn.speed * V[0] - 0.5 * (V[0] * V[0] + V[1] * V[1] + V[2] * V[2]) + U_s * V[0] -
              h * ((Kp_ + V[3]) * std::pow(rho, g - 1.0) - Kp_ * std::pow(dn.density, g - 1.0)) +
              c2_s / rho_s * drho + h * std::pow(rho_s, g - 1.0) * V[3];

    const auto b1 = c_.velocity_row(), b2 = c_.entropy_row();
    out.R1 = b1[0] * out.R01 + b1[1] * out.R02 + b1[2] * out.R03;
    out.R2 = b2[0] * out.R01 + b2[1] * out.R02 + b2[2] * out.R03;
    return out;
}

double JumpAlgebra::exit_remainder(const std::array<double, 5>& V) const {
    const BackgroundSolution& bg = c_.background();
    const double r2 = bg.geometry().r_exit;
    const RadialProfile ex = bg.downstream(r2);
    const double g = gamma_, h = g / (g - 1.0);
    const double P = density_pressure(V, r2)[1];
    const double K = Kp_ + V[3];
    return h * std::pow(K, 1.0 / g) * std::pow(P, (g - 1.0) / g) - h * std::pow(Kp_, 1.0 / g) * std::pow(ex.pressure, (g - 1.0) / g) -
           (P - ex.pressure) / ex.density - (B_ - 0.5 * ex.speed * ex.speed) / (g * Kp_) * V[3];
}

FaceKernels eval_face(const JumpAlgebra& alg, const Box& box, const std::array<Field2, 5>& Vs, const Field2& v6,
                      const SupersonicField& minus) {
    const int nt = box.nt(), nz = box.nz();
    FaceKernels k;
    for (Field2* f : {&k.density, &k.pressure, &k.J, &k.J2, &k.J3, &k.g2, &k.g3, &k.R01, &k.R02, &k.R03, &k.R1,
                      &k.R2, &k.q1, &k.q2, &k.q3, &k.bernoulli})
        *f = Field2(nt, nz);
    const BackgroundSolution& bg = alg.coefficients().background();
    const double rs = box.radial.lo;
    for (int j = 0; j < nt; ++j)
        for (int l = 0; l < nz; ++l) {
            ShockFacePoint p;
            p.v6 = v6(j, l);
            for (int v = 0; v < 5; ++v) p.V[v] = Vs[v](j, l);
            p.minus = minus.eval(rs + p.v6, box.angular.x(j), box.axial.x(l));
            const JumpPoint q = alg.eval(p);
            k.density(j, l) = q.density;
            k.pressure(j, l) = q.pressure;
            k.J(j, l) = q.J;
            k.J2(j, l) = q.J2;
            k.J3(j, l) = q.J3;
            k.g2(j, l) = q.g2;
            k.g3(j, l) = q.g3;
            k.R01(j, l) = q.R01;
            k.R02(j, l) = q.R02;
            k.R03(j, l) = q.R03;
            k.R1(j, l) = q.R1;
            k.R2(j, l) = q.R2;
            const RadialProfile up = bg.upstream(rs + p.v6);
            FlowState mbg;
            mbg.u_r = up.speed;
            mbg.density = up.density;
            mbg.entropy_K = bg.upstream_entropy();
            k.bernoulli(j, l) = bernoulli(bg.gas(), p.minus) - bernoulli(bg.gas(), mbg);
        }
    const double h2 = box.angular.step(), h3 = box.axial.step();
    const double a1 = alg.coefficients().a1;
    constexpr Parity even = Parity::cosine, odd = Parity::sine;
    const Field2 g2_2 = diff4(k.g2, 0, h2, odd), g3_3 = diff4(k.g3, 1, h3, odd);
    const Field2 R1_2 = diff4(k.R1, 0, h2, even), R1_3 = diff4(k.R1, 1, h3, even);
    const Field2 R1_22 = diff4(R1_2, 0, h2, odd), R1_33 = diff4(R1_3, 1, h3, odd);
    for (std::size_t n = 0; n < k.q1.size(); ++n) {
        k.q1.values()[n] = a1 * (g2_2.values()[n] / rs + g3_3.values()[n]) + R1_22.values()[n] / (rs * rs) +
                           R1_33.values()[n];
        k.q2.values()[n] = R1_2.values()[n] / rs + a1 * k.g2.values()[n];
        k.q3.values()[n] = R1_3.values()[n] + a1 * k.g3.values()[n];
    }
    return k;
}

Field2 vorticity_boundary(const JumpAlgebra& alg, const Box& box, const FaceKernels& k, const Field2& g4) {
    const double rs = box.radial.lo, a0 = alg.coefficients().a0;
    const Field2 g2_3 = diff4(k.g2, 1, box.axial.step(), Parity::cosine);
    const Field2 g3_2 = diff4(k.g3, 0, box.angular.step(), Parity::cosine);
    Field2 out(box);
    for (std::size_t n = 0; n < out.size(); ++n)
        out.values()[n] = (g2_3.values()[n] - g3_2.values()[n] / rs) / a0 + g4.values()[n];
    return out;
}

Field2 shock_poisson_data(const JumpAlgebra& alg, const Box& box, const FaceKernels& k, const Field2& W2,
                          const Field2& W3) {
    const double rs = box.radial.lo;
    const auto& c = alg.coefficients();
    const Field2 d2 = diff4(W2, 0, box.angular.step(), Parity::sine), d3 = diff4(W3, 1, box.axial.step(), Parity::sine);
    Field2 out(box);
    for (std::size_t n = 0; n < out.size(); ++n)
        out.values()[n] = k.q1.values()[n] + c.a0 * c.a1 * (d2.values()[n] / rs + d3.values()[n]);
    return out;
}

Field2 exit_data(const JumpAlgebra& alg, const std::array<Field2, 5>& Vh, const Field2& V5, const Field2& R4,
                 const Field2& pex, double eps) {
    const auto& c = alg.coefficients();
    const BackgroundSolution& bg = c.background();
    const double r2 = bg.geometry().r_exit;
    const RadialProfile ex = bg.downstream(r2);
    const double A = c.entropy_weight(r2), U = ex.speed;
    Field2 out(V5.nt(), V5.nz());
    for (std::size_t n = 0; n < out.size(); ++n) {
        std::array<double, 5> v;
        for (int q = 0; q < 5; ++q) v[q] = Vh[q].values()[n];
        const double sq = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        out.values()[n] = -A * R4.values()[n] + V5.values()[n] / U - eps * pex.values()[n] / (ex.density * U) -
                          sq / (2.0 * U) - alg.exit_remainder(v) / U;
    }
    return out;
}

Field2 update_shock(const JumpAlgebra& alg, const Field2& V1, const Field2& R1) {
    Field2 out(V1.nt(), V1.nz());
    const double a1 = alg.coefficients().a1;
    for (std::size_t n = 0; n < out.size(); ++n) out.values()[n] = (V1.values()[n] - R1.values()[n]) / a1;
    return out;
}

ShockSurface refine_shock(const JumpAlgebra& alg, const Box& box, Field2 v6, const Field2& V2, const Field2& V3,
                          const FaceKernels& k) {
    const double rs = box.radial.lo, a0 = alg.coefficients().a0;
    ShockSurface s{std::move(v6), Field2(box), Field2(box)};
    for (std::size_t n = 0; n < s.value.size(); ++n) {
        s.grad2.values()[n] = rs * (a0 * V2.values()[n] + k.g2.values()[n]);
        s.grad3.values()[n] = a0 * V3.values()[n] + k.g3.values()[n];
    }
    return s;
}

}  // namespace transonic

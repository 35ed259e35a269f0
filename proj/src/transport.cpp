#include "transonic/transport.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "transonic/errors.hpp"
#include "transonic/parallel.hpp"

namespace transonic {

TransportCoefficients transport_coefficients(const TransformOps& ops, const BackgroundAtNodes& bgn,
                                             const BackgroundSolution& bg, const PerturbationField& hat) {
    const Box& box = ops.box();
    const double g = bg.gas().gamma, B = bg.bernoulli(), K = bg.downstream_entropy();
    const std::size_t N = box.size();
    const auto& V = hat.V;

    double min_speed = bgn.speed[0];
    for (std::size_t n = 0; n < N; ++n) min_speed = std::min(min_speed, bgn.speed[n]);

    Field3 a(box), b(box), inv(box), Q(box);
    for (std::size_t n = 0; n < N; ++n) {
        const double Ub = bgn.speed[n];
        const double U1 = Ub + V[kRadial][n];
        if (!(U1 >= 0.5 * min_speed)) {
            throw StagnationFloor(fmt::format("radial speed {:.6g} below half the minimum background speed {:.6g}",
                                              U1, min_speed));
        }
        a[n] = V[kAngular][n] / U1;
        b[n] = V[kAxial][n] / U1;
        inv[n] = 1.0 / U1 - 1.0 / Ub;
        const double q = V[kAngular][n] * V[kAngular][n] + V[kAxial][n] * V[kAxial][n];
        const double full = (B + V[kBernoulli][n] - 0.5 * U1 * U1 - 0.5 * q) / (g * (K + V[kEntropy][n]) * U1);
        const double base = (B - 0.5 * Ub * Ub) / (g * K * Ub);
        Q[n] = full - base;
    }
    constexpr Parity even = Parity::cosine, odd = Parity::sine;
    const Gradient ga = ops.gradient(a, odd, even), gb = ops.gradient(b, even, odd);
    const Gradient gi = ops.gradient(inv, even, even), gq = ops.gradient(Q, even, even);
    const Gradient g4 = ops.gradient(V[kEntropy], even, even), g5 = ops.gradient(V[kBernoulli], even, even);

    TransportCoefficients tc;
    for (Field3* f : {&tc.K2, &tc.K3, &tc.mu, &tc.H0, &tc.coef1, &tc.damping, &tc.source}) *f = Field3(box);
    const ShockSurface& s = hat.shock;
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                const std::size_t n = a.index(i, j, k);
                const double D0 = ops.radius()[n];
                const double c = ops.shear(i, j, k);
                const double coef1 = ops.stretch(j, k) + a[n] / D0 * c * s.grad2(j, k) + b[n] * c * s.grad3(j, k);
                if (!(coef1 > 0.0)) {
                    throw StagnationFloor(fmt::format("transport operator degenerates at node ({}, {}, {})", i, j, k));
                }
                const double mu = ga.d2[n] + gb.d3[n] + 1.0 / D0;
                const double H0 = gi.d3[n] * g5.d2[n] - gi.d2[n] * g5.d3[n] + gq.d2[n] * g4.d3[n] - gq.d3[n] * g4.d2[n];
                tc.coef1[n] = coef1;
                tc.mu[n] = mu;
                tc.H0[n] = H0;
                tc.K2[n] = a[n] / D0 / coef1;
                tc.K3[n] = b[n] / coef1;
                tc.damping[n] = mu / coef1;
                tc.source[n] = H0 / coef1;
            }
    return tc;
}

namespace {

// Tricubic sampling of up to four fields with shared stencils.
struct Sampler {
    const Box& box;
    const Field3* f[4];
    int count;

    void operator()(double y1, double y2, double y3, double* out) const {
        const CubicStencil s1 = cubic_stencil(box.radial, y1);
        const CubicStencil s2 = cubic_stencil(box.angular, y2);
        const CubicStencil s3 = cubic_stencil(box.axial, y3);
        for (int q = 0; q < count; ++q) {
            const Field3& F = *f[q];
            double v = 0.0;
            for (int p = 0; p < 4; ++p) {
                double plane = 0.0;
                for (int m = 0; m < 4; ++m) {
                    const double* row = F.data() + F.index(s1.first + p, s2.first + m, s3.first);
                    plane += s2.w[m] * (s3.w[0] * row[0] + s3.w[1] * row[1] + s3.w[2] * row[2] + s3.w[3] * row[3]);
                }
                v += s1.w[p] * plane;
            }
            out[q] = v;
        }
    }
};

double clamp_axis(double y, const Axis& a, double& excursion) {
    const double tol = 1e-12;
    double over = 0.0;
    if (y < a.lo) over = a.lo - y;
    if (y > a.hi) over = y - a.hi;
    if (over > tol) {
        throw CharacteristicEscape(fmt::format("trajectory left the cross-section by {:.3g}", over));
    }
    excursion = std::max(excursion, over);
    return std::clamp(y, a.lo, a.hi);
}

}  // namespace

CharacteristicField trace_characteristics(const Box& box, const Field3& K2, const Field3& K3, const Field3* damping,
                                          const Field3* source) {
    CharacteristicField ch;
    ch.K2 = K2;
    ch.K3 = K3;
    for (Field3* f : {&ch.foot2, &ch.foot3, &ch.damping_integral, &ch.source_integral}) *f = Field3(box);
    const Field3 zero(box);
    const Field3& D = damping ? *damping : zero;
    const Field3& S = source ? *source : zero;
    const bool with_integrals = damping || source;
    const Sampler sample{box, {&K2, &K3, &D, &S}, with_integrals ? 4 : 2};
    const double step = -0.5 * box.radial.step();
    std::vector<double> excursion(box.nr(), 0.0);

    parallel_for(box.nr(), [&](int i) {
        double exc = 0.0;
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                // state: y2, y3, damping integral, source integral
                double y[4] = {box.angular.x(j), box.axial.x(k), 0.0, 0.0};
                double t = box.radial.x(i);
                auto rhs = [&](double tt, const double* st, double* dy) {
                    double v[4] = {0.0, 0.0, 0.0, 0.0};
                    sample(tt, st[0], st[1], v);
                    dy[0] = v[0];
                    dy[1] = v[1];
                    // going toward the shock, the damping integral grows
                    dy[2] = -v[2];
                    dy[3] = -v[3] * std::exp(-st[2]);
                };
                for (int n = 0; n < 2 * i; ++n) {
                    double k1[4], k2[4], k3[4], k4[4], tmp[4];
                    rhs(t, y, k1);
                    for (int q = 0; q < 4; ++q) tmp[q] = y[q] + 0.5 * step * k1[q];
                    tmp[0] = clamp_axis(tmp[0], box.angular, exc);
                    tmp[1] = clamp_axis(tmp[1], box.axial, exc);
                    rhs(t + 0.5 * step, tmp, k2);
                    for (int q = 0; q < 4; ++q) tmp[q] = y[q] + 0.5 * step * k2[q];
                    tmp[0] = clamp_axis(tmp[0], box.angular, exc);
                    tmp[1] = clamp_axis(tmp[1], box.axial, exc);
                    rhs(t + 0.5 * step, tmp, k3);
                    for (int q = 0; q < 4; ++q) tmp[q] = y[q] + step * k3[q];
                    tmp[0] = clamp_axis(tmp[0], box.angular, exc);
                    tmp[1] = clamp_axis(tmp[1], box.axial, exc);
                    rhs(t + step, tmp, k4);
                    for (int q = 0; q < 4; ++q) y[q] += step / 6.0 * (k1[q] + 2.0 * k2[q] + 2.0 * k3[q] + k4[q]);
                    y[0] = clamp_axis(y[0], box.angular, exc);
                    y[1] = clamp_axis(y[1], box.axial, exc);
                    t = (n + 1 == 2 * i) ? box.radial.lo : t + step;
                }
                const std::size_t idx = K2.index(i, j, k);
                ch.foot2[idx] = y[0];
                ch.foot3[idx] = y[1];
                ch.damping_integral[idx] = y[2];
                ch.source_integral[idx] = y[3];
            }
        excursion[i] = exc;
    });
    ch.max_excursion = *std::max_element(excursion.begin(), excursion.end());
    return ch;
}

CharacteristicField build_characteristics(const Box& box, const TransportCoefficients& tc) {
    return trace_characteristics(box, tc.K2, tc.K3, &tc.damping, &tc.source);
}

Field3 transport_bernoulli(const CharacteristicField& ch, const Box& box, const SupersonicField& minus,
                           const BackgroundSolution& bg, const ShockSurface& hat_shock) {
    Field3 out(box);
    const double rs = box.radial.lo;
    parallel_for(box.nr(), [&](int i) {
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                const std::size_t n = out.index(i, j, k);
                const double b2 = ch.foot2[n], b3 = ch.foot3[n];
                const double xi = rs + hat_shock.at(box, b2, b3);
                const FlowState m = minus.eval(xi, b2, b3);
                const RadialProfile up = bg.upstream(xi);
                FlowState mbg;
                mbg.u_r = up.speed;
                mbg.density = up.density;
                mbg.entropy_K = bg.upstream_entropy();
                out[n] = bernoulli(bg.gas(), m) - bernoulli(bg.gas(), mbg);
            }
    });
    return out;
}

Field3 entropy_remainder(const CharacteristicField& ch, const Box& box, const BackgroundCoefficients& c,
                         const ShockSurface& hat_shock, const Field2& R1, const Field2& R2) {
    Field3 out(box);
    const double ratio = c.a2 / c.a1;
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                const std::size_t n = out.index(i, j, k);
                const double b2 = ch.foot2[n], b3 = ch.foot3[n];
                const double v6b = hat_shock.at(box, b2, b3);
                const double R2b = interpolate(R2, box.angular, box.axial, b2, b3);
                out[n] = c.a2 * (v6b - hat_shock.value(j, k)) + R2b - ratio * R1(j, k);
            }
    return out;
}

Field3 transport_entropy(const Box& box, const BackgroundCoefficients& c, const Field2& V1_rs, const Field3& R4) {
    Field3 out(box);
    const double ratio = c.a2 / c.a1;
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) out(i, j, k) = ratio * V1_rs(j, k) + R4(i, j, k);
    return out;
}

Field3 transport_vorticity(const CharacteristicField& ch, const Box& box, const Field2& R6) {
    Field3 out(box);
    for (std::size_t n = 0; n < out.size(); ++n) {
        const double b = interpolate(R6, box.angular, box.axial, ch.foot2[n], ch.foot3[n]);
        out[n] = b * std::exp(-ch.damping_integral[n]) + ch.source_integral[n];
    }
    return out;
}

}  // namespace transonic

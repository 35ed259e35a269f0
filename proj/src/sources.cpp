#include "transonic/sources.hpp"

#include "transonic/parallel.hpp"

namespace transonic {

IterateDerivatives IterateDerivatives::make(const TransformOps& ops, const PerturbationField& f) {
    const Box& box = ops.box();
    IterateDerivatives d;
    for (int v = 0; v < 5; ++v) {
        d.p1[v] = diff4(f.V[v], 0, box.radial.step());
        d.p2[v] = diff4(f.V[v], 1, box.angular.step(), v == kAngular ? Parity::sine : Parity::cosine);
        d.p3[v] = diff4(f.V[v], 2, box.axial.step(), v == kAxial ? Parity::sine : Parity::cosine);
        d.D[v] = ops.combine(d.p1[v], d.p2[v], d.p3[v]);
    }
    return d;
}

RadialTables RadialTables::make(const BackgroundCoefficients& c, const TransformOps& ops) {
    const BackgroundSolution& bg = c.background();
    const Box& box = ops.box();
    const double g = bg.gas().gamma, B = bg.bernoulli(), K = bg.downstream_entropy();
    RadialTables t;
    t.at_radius = BackgroundAtNodes::make(bg, ops.radius());
    for (Field3* f : {&t.ellipticity_r, &t.first_order_r, &t.bernoulli_source_r, &t.entropy_weight_r})
        *f = Field3(box);
    const BackgroundAtNodes& a = t.at_radius;
    for (std::size_t n = 0; n < box.size(); ++n) {
        const double r = ops.radius()[n], U = a.speed[n], c2 = a.sound_sq[n];
        const double M2 = U * U / c2;
        t.ellipticity_r[n] = 1.0 - M2;
        t.first_order_r[n] = M2 * (2.0 + (g - 1.0) * M2) / (r * (1.0 - M2));
        t.bernoulli_source_r[n] = -(g - 1.0) * (a.speed_slope[n] + U / r) / c2;
        t.entropy_weight_r[n] = (B - 0.5 * U * U) / (g * K * U);
    }
    for (double y : box.radial.coordinates()) {
        t.ellipticity_y.push_back(c.ellipticity(y));
        t.first_order_y.push_back(c.first_order(y));
        t.bernoulli_source_y.push_back(c.bernoulli_source(y));
        t.entropy_weight_y.push_back(c.entropy_weight(y));
        t.mach_sq_y.push_back(bg.downstream(y).mach_sq);
    }
    return t;
}

namespace {

// Q = (B + V5 - U1^2/2 - (V2^2 + V3^2)/2) / (gamma (K + V4) U1), U1 = U(D0) + V1.
double entropy_factor(double gamma, double B, double K, double U, const double* V) {
    const double U1 = U + V[0];
    return (B + V[4] - 0.5 * U1 * U1 - 0.5 * (V[1] * V[1] + V[2] * V[2])) / (gamma * (K + V[3]) * U1);
}

}  // namespace

TransformDefects transform_defects(const Box& box, const BackgroundSolution& bg, const RadialTables& t,
                                   const TransformOps& ops, const PerturbationField& f,
                                   const IterateDerivatives& d) {
    const double g = bg.gas().gamma, B = bg.bernoulli(), K = bg.downstream_entropy();
    TransformDefects out;
    for (Field3* x : {&out.H1, &out.H2, &out.H3, &out.div_defect}) *x = Field3(box);
    const int nt = box.nt(), nz = box.nz();
    parallel_for(box.nr(), [&](int i) {
        const double y = box.radial.x(i);
        const double Ay = t.entropy_weight_y[i];
        for (int j = 0; j < nt; ++j)
            for (int k = 0; k < nz; ++k) {
                const std::size_t n = out.H1.index(i, j, k);
                const double D0 = ops.radius()[n];
                double V[5];
                for (int v = 0; v < 5; ++v) V[v] = f.V[v][n];
                const double Q = entropy_factor(g, B, K, t.at_radius.speed[n], V);
                const auto& D = d.D;
                out.H1[n] = (d.p2[2][n] / y - d.p3[1][n]) - (D[2].d2[n] - D[1].d3[n]);
                out.H2[n] = (d.p3[0][n] - d.p1[2][n] + Ay * d.p3[3][n]) -
                            (D[0].d3[n] - D[2].d1[n] + Q * D[3].d3[n]);
                out.H3[n] = (d.p1[1][n] + V[1] / y - d.p2[0][n] / y - Ay / y * d.p2[3][n]) -
                            (D[1].d1[n] - D[0].d2[n] + V[1] / D0 - Q * D[3].d2[n]);
                const double fitted = t.ellipticity_r[n] * D[0].d1[n] + D[1].d2[n] + D[2].d3[n] +
                                      (1.0 / D0 + t.first_order_r[n]) * V[0];
                const double boxed = t.ellipticity_y[i] * d.p1[0][n] + d.p2[1][n] / y + d.p3[2][n] +
                                     (1.0 / y + t.first_order_y[i]) * V[0];
                out.div_defect[n] = fitted - boxed;
            }
    });
    return out;
}

Field3 deformation_nonlinearity(const Box& box, const BackgroundSolution& bg, const RadialTables& t,
                                const TransformOps& ops, const PerturbationField& f, const IterateDerivatives& d) {
    const double g = bg.gas().gamma;
    Field3 out(box);
    for (std::size_t n = 0; n < box.size(); ++n) {
        const double r = ops.radius()[n];
        const double U = t.at_radius.speed[n], Up = t.at_radius.speed_slope[n], c2 = t.at_radius.sound_sq[n];
        const double V1 = f.V[0][n], V2 = f.V[1][n], V3 = f.V[2][n], V5 = f.V[4][n];
        const double q = V1 * V1 + V2 * V2 + V3 * V3;
        const double d1V1 = d.D[0].d1[n], d1V2 = d.D[1].d1[n], d1V3 = d.D[2].d1[n];
        const double d2V1 = d.D[0].d2[n], d2V2 = d.D[1].d2[n], d2V3 = d.D[2].d2[n];
        const double d3V1 = d.D[0].d3[n], d3V2 = d.D[1].d3[n], d3V3 = d.D[2].d3[n];
        double F = -(g - 1.0) * (d1V1 + V1 / r) * V5;
        F += (Up + d1V1) * (0.5 * (g + 1.0) * V1 * V1 + 0.5 * (g - 1.0) * (V2 * V2 + V3 * V3));
        F += (g - 1.0) * (U + V1) / (2.0 * r) * q;
        F += (g + 1.0) * U * V1 * d1V1 + (g - 1.0) * U * V1 * V1 / r;
        F -= ((g - 1.0) * V5 - 0.5 * (g - 1.0) * q - (g - 1.0) * U * V1) * (d2V2 + d3V3);
        F += V2 * V2 * d2V2 + V3 * V3 * d3V3;
        F += (U + V1) * (V2 * d1V2 + V3 * d1V3);
        F += V2 * ((U + V1) * d2V1 + V3 * d2V3);
        F += V3 * ((U + V1) * d3V1 + V2 * d3V2);
        out[n] = F / c2;
    }
    return out;
}

CurlSources curl_sources(const Box& box, const RadialTables& t, const TransformOps& ops,
                         const PerturbationField& hat, const TransformDefects& def, const Field3& F,
                         const Field3& omega, const Field3& V5, const Field3& R4) {
    constexpr Parity even = Parity::cosine;
    const Gradient g5 = ops.gradient(V5, even, even);
    const Field3 R4_2 = diff4(R4, 1, box.angular.step(), even), R4_3 = diff4(R4, 2, box.axial.step(), even);
    CurlSources s;
    for (Field3* x : {&s.G0, &s.G1, &s.G2, &s.G3}) *x = Field3(box);
    for (int i = 0; i < box.nr(); ++i) {
        const double y = box.radial.x(i);
        const double Ay = t.entropy_weight_y[i], ky = t.bernoulli_source_y[i];
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                const std::size_t n = F.index(i, j, k);
                const double U1 = t.at_radius.speed[n] + hat.V[0][n];
                s.G0[n] = F[n] - def.div_defect[n] + (t.bernoulli_source_r[n] - ky) * hat.V[4][n];
                s.G1[n] = omega[n] + def.H1[n];
                s.G2[n] = (hat.V[1][n] * omega[n] + g5.d3[n]) / U1 + def.H2[n] - Ay * R4_3[n];
                s.G3[n] = (hat.V[2][n] * omega[n] - g5.d2[n]) / U1 + def.H3[n] + Ay / y * R4_2[n];
            }
    }
    return s;
}

}  // namespace transonic

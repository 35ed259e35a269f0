#include "transonic/inflow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <fmt/os.h>

#include "transonic/errors.hpp"

namespace transonic {

const char* variable_name(InflowVariable v) {
    switch (v) {
        case InflowVariable::radial_velocity: return "u_r";
        case InflowVariable::angular_velocity: return "u_theta";
        case InflowVariable::axial_velocity: return "u_z";
        case InflowVariable::pressure: return "pressure";
        case InflowVariable::entropy: return "entropy";
    }
    return "?";
}

InflowVariable variable_from_name(const std::string& name) {
    for (int i = 0; i < 5; ++i) {
        auto v = InflowVariable(i);
        if (name == variable_name(v)) return v;
    }
    throw ConfigError(fmt::format("unknown inflow variable '{}'", name));
}

namespace {

double mode_factor(Parity p, int index, double s, double length) {
    const double a = index * Basis1D::kPi * s / length;
    return p == Parity::cosine ? std::cos(a) : std::sin(a);
}

}  // namespace

double evaluate_modes(const std::vector<CrossSectionMode>& modes, const NozzleGeometry& geo, double theta,
                      double z) {
    double v = 0.0;
    for (const auto& m : modes) {
        v += m.amplitude * mode_factor(m.angular_parity, m.angular_index, theta + geo.half_angle, 2 * geo.half_angle) *
             mode_factor(m.axial_parity, m.axial_index, z + geo.z_half, 2 * geo.z_half);
    }
    return v;
}

Parity required_angular_parity(InflowVariable v) {
    return v == InflowVariable::angular_velocity ? Parity::sine : Parity::cosine;
}

Parity required_axial_parity(InflowVariable v) {
    return v == InflowVariable::axial_velocity ? Parity::sine : Parity::cosine;
}

double InletPerturbation::profile(InflowVariable v, double theta, double z) const {
    double s = 0.0;
    for (const auto& m : modes) {
        if (m.variable != v) continue;
        s += evaluate_modes({m.shape}, geometry, theta, z);
    }
    return s;
}

InletPerturbation make_inlet(double eps, const std::vector<InflowMode>& modes, const NozzleGeometry& geo) {
    if (!(eps >= 0.0)) throw IncompatibleMode("perturbation amplitude must be non-negative");
    double largest = 0.0;
    for (const auto& m : modes) {
        if (m.shape.angular_index < 0 || m.shape.axial_index < 0) {
            throw IncompatibleMode("mode indices must be non-negative");
        }
        if (m.shape.angular_parity != required_angular_parity(m.variable) ||
            m.shape.axial_parity != required_axial_parity(m.variable)) {
            throw IncompatibleMode(fmt::format("mode ({}, {}) of {} breaks the wall compatibility conditions",
                                               m.shape.angular_index, m.shape.axial_index,
                                               variable_name(m.variable)));
        }
        if (!std::isfinite(m.shape.amplitude)) throw IncompatibleMode("non-finite mode amplitude");
        largest = std::max(largest, std::abs(m.shape.amplitude));
    }
    InletPerturbation in;
    in.eps = eps;
    in.geometry = geo;
    if (eps == 0.0 || largest == 0.0) return in;
    in.modes = modes;
    for (auto& m : in.modes) m.shape.amplitude /= largest;
    return in;
}

SupersonicField::SupersonicField(const InflowBackground& bg, const Axis& radial, const Axis& angular,
                                 const Axis& axial)
    : bg_(bg), radial_(radial), angular_(angular), axial_(axial) {
    for (auto& f : delta_) f = Field3(radial.nodes(), angular.nodes(), axial.nodes());
}

namespace {

FlowState compose(const InflowBackground& bg, double r, const std::array<double, 5>& d) {
    const auto& b = bg.supersonic;
    const BranchPoint p = solve_branch(bg.gas, b.mass_flux_m, b.B, b.K, r, Branch::supersonic);
    FlowState s;
    s.u_r = p.speed + d[0];
    s.u_theta = d[1];
    s.u_z = d[2];
    s.density = p.density + d[3];
    s.entropy_K = b.K + d[4];
    return s;
}

}  // namespace

FlowState SupersonicField::node(int i, int j, int k) const {
    std::array<double, 5> d;
    for (int v = 0; v < 5; ++v) d[v] = delta_[v](i, j, k);
    return compose(bg_, radial_.x(i), d);
}

FlowState SupersonicField::eval(double r, double y2, double y3) const {
    const double tol = 1e-9;
    if (r < radial_.lo - tol || r > radial_.hi + tol) {
        throw OutOfDomain(fmt::format("supersonic field evaluated at r={:.8g} outside [{}, {}]", r, radial_.lo,
                                      radial_.hi));
    }
    if (y2 < angular_.lo - tol || y2 > angular_.hi + tol || y3 < axial_.lo - tol || y3 > axial_.hi + tol) {
        throw OutOfDomain(fmt::format("supersonic field evaluated outside the cross-section at ({}, {})", y2, y3));
    }
    const Box box{radial_, angular_, axial_};
    std::array<double, 5> d;
    for (int v = 0; v < 5; ++v) d[v] = interpolate(delta_[v], box, r, y2, y3);
    return compose(bg_, r, d);
}

FlowState eval_minus(const SupersonicField& field, double r, double y2, double y3) { return field.eval(r, y2, y3); }

namespace {

using Vec5 = std::array<double, 5>;

struct Prim {
    double u1, u2, u3, rho, K;
};

struct FluxModel {
    double gamma;

    double pressure(const Prim& p) const { return p.K * std::pow(p.rho, gamma); }
    double bern(const Prim& p, double P) const {
        return 0.5 * (p.u1 * p.u1 + p.u2 * p.u2 + p.u3 * p.u3) + gamma / (gamma - 1.0) * P / p.rho;
    }
    Vec5 radial(const Prim& p, double r) const {
        const double P = pressure(p), m = p.rho * p.u1, B = bern(p, P);
        return {r * m, r * (m * p.u1 + P), r * m * p.u2, r * m * p.u3, r * m * B};
    }
    Vec5 angular(const Prim& p) const {
        const double P = pressure(p), n = p.rho * p.u2, B = bern(p, P);
        return {n, n * p.u1, n * p.u2 + P, n * p.u3, n * B};
    }
    Vec5 axial(const Prim& p, double r) const {
        const double P = pressure(p), n = p.rho * p.u3, B = bern(p, P);
        return {r * n, r * n * p.u1, r * n * p.u2, r * (n * p.u3 + P), r * n * B};
    }
    Vec5 source(const Prim& p) const {
        const double P = pressure(p);
        return {0.0, P + p.rho * p.u2 * p.u2, -p.rho * p.u1 * p.u2, 0.0, 0.0};
    }
    Prim decode(const Vec5& Q, double r) const {
        const double m = Q[0] / r, f = Q[1] / r;
        const double u2 = Q[2] / Q[0], u3 = Q[3] / Q[0], B = Q[4] / Q[0];
        const double alpha = (gamma + 1.0) / (2.0 * (gamma - 1.0));
        const double beta = gamma * f / ((gamma - 1.0) * m);
        const double disc = beta * beta - 4.0 * alpha * (B - 0.5 * (u2 * u2 + u3 * u3));
        if (!(disc >= 0.0)) throw MarchBreakdown(fmt::format("radial flux not invertible at r={:.6g}", r));
        const double u1 = (beta + std::sqrt(disc)) / (2.0 * alpha);
        const double rho = m / u1;
        const double P = f - m * u1;
        return {u1, u2, u3, rho, P / std::pow(rho, gamma)};
    }
};

// Right side of the radial march for the perturbation of the radial fluxes:
// d(dQ)/dr = -dG/dtheta - dH/dz + S, minus the same for the background.
// Fourth-order centered differences with two reflected ghost layers, so the
// scheme commutes with the wall reflections.
class Marcher {
public:
    Marcher(const GasModel& gas, int nt, int nz, double ht, double hz)
        : fm_{gas.gamma}, nt_(nt), nz_(nz), ht_(ht), hz_(hz) {}

    std::vector<Vec5> rhs(const std::vector<Vec5>& dQ, const Vec5& Qbar, double r) const {
        const std::size_t n = dQ.size();
        std::vector<Prim> prim(n);
        for (std::size_t q = 0; q < n; ++q) {
            Vec5 full;
            for (int v = 0; v < 5; ++v) full[v] = Qbar[v] + dQ[q][v];
            prim[q] = fm_.decode(full, r);
        }
        const Prim base = fm_.decode(Qbar, r);
        const Vec5 Sbar = fm_.source(base);
        std::vector<Vec5> G(n), H(n), out(n);
        for (std::size_t q = 0; q < n; ++q) {
            G[q] = fm_.angular(prim[q]);
            H[q] = fm_.axial(prim[q], r);
        }
        // reflected value of flux component v at (j, k): u_theta odd across
        // angular walls, u_z odd across axial walls
        static constexpr int odd_theta[5] = {1, 1, 0, 1, 1};  // components of G odd in theta
        static constexpr int odd_z_G[5] = {0, 0, 0, 1, 0};
        static constexpr int odd_theta_H[5] = {0, 0, 1, 0, 0};
        static constexpr int odd_z[5] = {1, 1, 1, 0, 1};      // components of H odd in z
        auto at = [&](const std::vector<Vec5>& F, const int* oth, const int* oz, int j, int k, int v) {
            double sgn = 1.0;
            if (j < 0) { j = -j; if (oth[v]) sgn = -sgn; }
            if (j > nt_ - 1) { j = 2 * (nt_ - 1) - j; if (oth[v]) sgn = -sgn; }
            if (k < 0) { k = -k; if (oz[v]) sgn = -sgn; }
            if (k > nz_ - 1) { k = 2 * (nz_ - 1) - k; if (oz[v]) sgn = -sgn; }
            return sgn * F[std::size_t(j) * nz_ + k][v];
        };
        for (int j = 0; j < nt_; ++j)
            for (int k = 0; k < nz_; ++k) {
                const std::size_t c = std::size_t(j) * nz_ + k;
                const Vec5 S = fm_.source(prim[c]);
                for (int v = 0; v < 5; ++v) {
                    const double dG = (-at(G, odd_theta, odd_z_G, j + 2, k, v) + 8.0 * at(G, odd_theta, odd_z_G, j + 1, k, v) -
                                       8.0 * at(G, odd_theta, odd_z_G, j - 1, k, v) + at(G, odd_theta, odd_z_G, j - 2, k, v)) /
                                      (12.0 * ht_);
                    const double dH = (-at(H, odd_theta_H, odd_z, j, k + 2, v) + 8.0 * at(H, odd_theta_H, odd_z, j, k + 1, v) -
                                       8.0 * at(H, odd_theta_H, odd_z, j, k - 1, v) + at(H, odd_theta_H, odd_z, j, k - 2, v)) /
                                      (12.0 * hz_);
                    out[c][v] = -dG - dH + S[v] - Sbar[v];
                }
            }
        return out;
    }

    // Largest characteristic slope per unit radius, scaled by the grid steps.
    double slope_rate(const std::vector<Vec5>& Q, double r, double& min_mach) const {
        double rate = 0.0;
        min_mach = 1e300;
        for (const auto& q : Q) {
            const Prim p = fm_.decode(q, r);
            const double c2 = fm_.gamma * p.K * std::pow(p.rho, fm_.gamma - 1.0);
            const double u2 = p.u1 * p.u1;
            const double c = std::sqrt(c2);
            min_mach = std::min(min_mach, std::sqrt((u2 + p.u2 * p.u2 + p.u3 * p.u3) / c2));
            const double den = u2 - c2;
            if (!(den > 0.0)) return 1e300;
            const double lt = (std::abs(p.u1 * p.u2) + c * std::sqrt(std::max(0.0, u2 + p.u2 * p.u2 - c2))) / (r * den);
            const double lz = (std::abs(p.u1 * p.u3) + c * std::sqrt(std::max(0.0, u2 + p.u3 * p.u3 - c2))) / den;
            rate = std::max(rate, lt / ht_ + lz / hz_);
        }
        return rate;
    }

    const FluxModel& model() const { return fm_; }

private:
    FluxModel fm_;
    int nt_, nz_;
    double ht_, hz_;
};

Prim background_prim(const InflowBackground& bg, double r) {
    const auto& b = bg.supersonic;
    const BranchPoint p = solve_branch(bg.gas, b.mass_flux_m, b.B, b.K, r, Branch::supersonic);
    return {p.speed, 0.0, 0.0, p.density, b.K};
}

void record_station(SupersonicField& f, int i, const FluxModel& fm, const std::vector<Vec5>& Qbar,
                    const std::vector<Vec5>& dQ, double r) {
    const int nz = f.axial().nodes();
    const Prim base = fm.decode(Qbar[0], r);
    for (std::size_t n = 0; n < dQ.size(); ++n) {
        Vec5 q;
        for (int v = 0; v < 5; ++v) q[v] = Qbar[n][v] + dQ[n][v];
        const Prim p = fm.decode(q, r);
        const int j = int(n) / nz, k = int(n) % nz;
        f.perturbation()[0](i, j, k) = p.u1 - base.u1;
        f.perturbation()[1](i, j, k) = p.u2 - base.u2;
        f.perturbation()[2](i, j, k) = p.u3 - base.u3;
        f.perturbation()[3](i, j, k) = p.rho - base.rho;
        f.perturbation()[4](i, j, k) = p.K - base.K;
    }
}

void wall_diagnostics(SupersonicField& f) {
    auto& d = f.diagnostics;
    const auto& del = f.perturbation();
    const double ht = f.angular().step(), hz = f.axial().step();
    const int nt = f.angular().nodes(), nz = f.axial().nodes();
    for (int i = 0; i < f.radial().nodes(); ++i) {
        std::array<Field2, 5> s;
        for (int v = 0; v < 5; ++v) s[v] = del[v].slice(i);
        for (int v : {0, 2, 3, 4}) {
            const Field2 g = diff(s[v], 0, ht);
            for (int k = 0; k < nz; ++k)
                d.angular_wall_slope = std::max({d.angular_wall_slope, std::abs(g(0, k)), std::abs(g(nt - 1, k))});
        }
        for (int v : {0, 1, 3, 4}) {
            const Field2 g = diff(s[v], 1, hz);
            for (int j = 0; j < nt; ++j)
                d.axial_wall_slope = std::max({d.axial_wall_slope, std::abs(g(j, 0)), std::abs(g(j, nz - 1))});
        }
        const Field2 c2 = diff2(s[1], 0, ht);
        const Field2 c3 = diff2(s[2], 1, hz);
        for (int k = 0; k < nz; ++k) {
            d.angular_wall_value = std::max({d.angular_wall_value, std::abs(s[1](0, k)), std::abs(s[1](nt - 1, k))});
            d.angular_wall_curvature = std::max({d.angular_wall_curvature, std::abs(c2(0, k)), std::abs(c2(nt - 1, k))});
        }
        for (int j = 0; j < nt; ++j) {
            d.axial_wall_value = std::max({d.axial_wall_value, std::abs(s[2](j, 0)), std::abs(s[2](j, nz - 1))});
            d.axial_wall_curvature = std::max({d.axial_wall_curvature, std::abs(c3(j, 0)), std::abs(c3(j, nz - 1))});
        }
    }
    double m = 0.0;
    for (const auto& v : del) m = std::max(m, max_abs(v));
    d.max_perturbation = m;
}

// Conservation residual of the stored field with the background's discrete
// residual subtracted, centered differences in all three directions.
double conservation_residual(const SupersonicField& f) {
    const FluxModel fm{f.background().gas.gamma};
    const int nr = f.radial().nodes(), nt = f.angular().nodes(), nz = f.axial().nodes();
    const double hr = f.radial().step(), ht = f.angular().step(), hz = f.axial().step();
    auto state = [&](int i, int j, int k, bool perturbed) {
        Prim p = background_prim(f.background(), f.radial().x(i));
        if (perturbed) {
            // reflect across the walls for the centered stencils
            double su2 = 1.0, su3 = 1.0;
            if (j < 0) { j = -j; su2 = -1.0; }
            if (j >= nt) { j = 2 * (nt - 1) - j; su2 = -1.0; }
            if (k < 0) { k = -k; su3 = -1.0; }
            if (k >= nz) { k = 2 * (nz - 1) - k; su3 = -1.0; }
            const auto& d = f.perturbation();
            p.u1 += d[0](i, j, k);
            p.u2 += su2 * d[1](i, j, k);
            p.u3 += su3 * d[2](i, j, k);
            p.rho += d[3](i, j, k);
            p.K += d[4](i, j, k);
        }
        return p;
    };
    double worst = 0.0;
    for (int i = 1; i < nr - 1; ++i) {
        const double r = f.radial().x(i);
        for (int j = 0; j < nt; ++j)
            for (int k = 0; k < nz; ++k) {
                Vec5 res[2];
                for (int pert = 0; pert < 2; ++pert) {
                    const bool on = pert == 1;
                    const Vec5 Fp = fm.radial(state(i + 1, j, k, on), f.radial().x(i + 1));
                    const Vec5 Fm = fm.radial(state(i - 1, j, k, on), f.radial().x(i - 1));
                    const Vec5 Gp = fm.angular(state(i, j + 1, k, on));
                    const Vec5 Gm = fm.angular(state(i, j - 1, k, on));
                    const Vec5 Hp = fm.axial(state(i, j, k + 1, on), r);
                    const Vec5 Hm = fm.axial(state(i, j, k - 1, on), r);
                    const Vec5 S = fm.source(state(i, j, k, on));
                    for (int v = 0; v < 5; ++v) {
                        res[pert][v] = (Fp[v] - Fm[v]) / (2 * hr) + (Gp[v] - Gm[v]) / (2 * ht) +
                                       (Hp[v] - Hm[v]) / (2 * hz) - S[v];
                    }
                }
                for (int v = 0; v < 5; ++v) worst = std::max(worst, std::abs(res[1][v] - res[0][v]));
            }
    }
    return worst;
}

}  // namespace

SupersonicField march_supersonic(const InflowBackground& bg, const InletPerturbation& inlet, const Axis& angular,
                                 const Axis& axial, const MarchOptions& opt) {
    const Axis radial{bg.geometry.r_inlet, bg.geometry.r_exit, opt.stations};
    SupersonicField field(bg, radial, angular, axial);
    const int nt = angular.nodes(), nz = axial.nodes();
    const std::size_t n = std::size_t(nt) * nz;
    Marcher marcher(bg.gas, nt, nz, angular.step(), axial.step());
    const FluxModel& fm = marcher.model();

    auto background_flux = [&](double r) { return std::vector<Vec5>(n, fm.radial(background_prim(bg, r), r)); };

    // inlet state
    const double r1 = radial.lo;
    const Prim base = background_prim(bg, r1);
    const double P1 = fm.pressure(base);
    std::vector<Vec5> Qbar = background_flux(r1);
    std::vector<Vec5> dQ(n);
    for (int j = 0; j < nt; ++j)
        for (int k = 0; k < nz; ++k) {
            const double th = angular.x(j), z = axial.x(k);
            const double e = inlet.eps;
            Prim p;
            p.u1 = base.u1 + e * inlet.profile(InflowVariable::radial_velocity, th, z);
            p.u2 = e * inlet.profile(InflowVariable::angular_velocity, th, z);
            p.u3 = e * inlet.profile(InflowVariable::axial_velocity, th, z);
            p.K = base.K + e * inlet.profile(InflowVariable::entropy, th, z);
            const double P = P1 + e * inlet.profile(InflowVariable::pressure, th, z);
            p.rho = std::pow(P / p.K, 1.0 / bg.gas.gamma);
            if (j == 0 || j == nt - 1) p.u2 = 0.0;
            if (k == 0 || k == nz - 1) p.u3 = 0.0;
            const Vec5 q = fm.radial(p, r1);
            for (int v = 0; v < 5; ++v) dQ[j * nz + k][v] = q[v] - Qbar[0][v];
        }
    record_station(field, 0, fm, Qbar, dQ, r1);

    double min_mach = 1e300;
    int substeps = 0;
    for (int i = 0; i < radial.intervals; ++i) {
        const double ra = radial.x(i), rb = radial.x(i + 1);
        std::vector<Vec5> Q(n);
        for (std::size_t q = 0; q < n; ++q)
            for (int v = 0; v < 5; ++v) Q[q][v] = Qbar[q][v] + dQ[q][v];
        double mm = 0.0;
        const double rate = marcher.slope_rate(Q, ra, mm);
        min_mach = std::min(min_mach, mm);
        if (mm < opt.mach_guard) {
            throw MarchBreakdown(fmt::format("Mach {:.4f} below the guard {:.2f} at r={:.6g}", mm, opt.mach_guard, ra));
        }
        const int nsub = std::max(1, int(std::ceil((rb - ra) * rate / opt.cfl)));
        const double dr = (rb - ra) / nsub;
        auto bar = [&](double r) { return fm.radial(background_prim(bg, r), r); };
        auto axpy = [](const std::vector<Vec5>& x, const std::vector<Vec5>& k, double a) {
            std::vector<Vec5> y = x;
            for (std::size_t q = 0; q < y.size(); ++q)
                for (int v = 0; v < 5; ++v) y[q][v] += a * k[q][v];
            return y;
        };
        for (int s = 0; s < nsub; ++s) {
            const double r = ra + s * dr;
            const Vec5 b0 = bar(r), bh = bar(r + 0.5 * dr), b1 = bar(r + dr);
            const auto k1 = marcher.rhs(dQ, b0, r);
            const auto k2 = marcher.rhs(axpy(dQ, k1, 0.5 * dr), bh, r + 0.5 * dr);
            const auto k3 = marcher.rhs(axpy(dQ, k2, 0.5 * dr), bh, r + 0.5 * dr);
            const auto k4 = marcher.rhs(axpy(dQ, k3, dr), b1, r + dr);
            for (std::size_t q = 0; q < n; ++q)
                for (int v = 0; v < 5; ++v) dQ[q][v] += dr / 6.0 * (k1[q][v] + 2.0 * k2[q][v] + 2.0 * k3[q][v] + k4[q][v]);
            ++substeps;
        }
        Qbar = background_flux(rb);
        record_station(field, i + 1, fm, Qbar, dQ, rb);
    }
    {
        std::vector<Vec5> Q(n);
        for (std::size_t q = 0; q < n; ++q)
            for (int v = 0; v < 5; ++v) Q[q][v] = Qbar[q][v] + dQ[q][v];
        double mm = 0.0;
        marcher.slope_rate(Q, radial.hi, mm);
        min_mach = std::min(min_mach, mm);
        if (mm < opt.mach_guard) {
            throw MarchBreakdown(fmt::format("Mach {:.4f} below the guard at the exit", mm));
        }
    }
    field.diagnostics.min_mach = min_mach;
    field.diagnostics.substeps = substeps;
    wall_diagnostics(field);
    field.diagnostics.euler_residual = conservation_residual(field);
    return field;
}

SupersonicField frozen_supersonic(const InflowBackground& bg, const InletPerturbation& inlet, const Axis& angular,
                                  const Axis& axial, int stations) {
    const Axis radial{bg.geometry.r_inlet, bg.geometry.r_exit, stations};
    SupersonicField field(bg, radial, angular, axial);
    const double g = bg.gas.gamma;
    for (int i = 0; i < radial.nodes(); ++i) {
        const Prim base = background_prim(bg, radial.x(i));
        const double P = base.K * std::pow(base.rho, g);
        for (int j = 0; j < angular.nodes(); ++j)
            for (int k = 0; k < axial.nodes(); ++k) {
                const double th = angular.x(j), z = axial.x(k), e = inlet.eps;
                const double K = base.K + e * inlet.profile(InflowVariable::entropy, th, z);
                const double Pp = P + e * inlet.profile(InflowVariable::pressure, th, z);
                auto& d = field.perturbation();
                d[0](i, j, k) = e * inlet.profile(InflowVariable::radial_velocity, th, z);
                d[1](i, j, k) = e * inlet.profile(InflowVariable::angular_velocity, th, z);
                d[2](i, j, k) = e * inlet.profile(InflowVariable::axial_velocity, th, z);
                d[3](i, j, k) = std::pow(Pp / K, 1.0 / g) - base.rho;
                d[4](i, j, k) = K - base.K;
            }
    }
    wall_diagnostics(field);
    return field;
}

void write_field_csv(const SupersonicField& field, const std::string& path) {
    auto out = fmt::output_file(path);
    out.print("r,theta,x3,u_r,u_theta,u_z,pressure,entropy_K\n");
    const GasModel& gas = field.background().gas;
    for (int i = 0; i < field.radial().nodes(); ++i)
        for (int j = 0; j < field.angular().nodes(); ++j)
            for (int k = 0; k < field.axial().nodes(); ++k) {
                const FlowState s = field.node(i, j, k);
                out.print("{:.10g},{:.10g},{:.10g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n", field.radial().x(i),
                          field.angular().x(j), field.axial().x(k), s.u_r, s.u_theta, s.u_z, pressure(gas, s),
                          s.entropy_K);
            }
}

}  // namespace transonic

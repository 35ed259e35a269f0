#include "transonic/fixed_point.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "transonic/errors.hpp"
#include "transonic/verification.hpp"

namespace transonic {

Problem::Problem(const Box& box_, int angular_modes, int axial_modes, const InflowBackground& inflow_,
                 double shock_radius, SupersonicField minus_, Field2 exit_perturbation_, double eps_,
                 double data_norm_)
    : box(box_),
      basis(box_, angular_modes, axial_modes),
      inflow(inflow_),
      background(inflow_, shock_radius),
      coeffs(background),
      jump(coeffs),
      minus(std::move(minus_)),
      elliptic(box_, basis, coeffs),
      exit_perturbation(std::move(exit_perturbation_)),
      eps(eps_),
      data_norm(data_norm_) {}

namespace {

template <class F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (SolverError& e) {
        if (e.stage().empty()) e.set_stage(name);
        throw;
    }
}

std::array<Field2, 5> face(const PerturbationField& f, int i) {
    std::array<Field2, 5> out;
    for (int v = 0; v < 5; ++v) out[v] = f.V[v].slice(i);
    return out;
}

}  // namespace

StepResult apply_T(const Problem& p, const PerturbationField& hat) {
    const Box& box = p.box;
    const int N = box.radial.intervals;
    const double h1 = box.radial.step();
    StepResult out;

    const TransformOps ops = stage("transform", [&] { return TransformOps(box, hat.shock); });
    const RadialTables tables = stage("transform", [&] { return RadialTables::make(p.coeffs, ops); });

    const CharacteristicField ch = stage("characteristics", [&] {
        const TransportCoefficients tc = transport_coefficients(ops, tables.at_radius, p.background, hat);
        return build_characteristics(box, tc);
    });
    out.characteristic_excursion = ch.max_excursion;

    out.kernels = stage("kernels", [&] { return eval_face(p.jump, box, face(hat, 0), hat.shock.value, p.minus); });
    const FaceKernels& fk = out.kernels;

    Field3 V5 = stage("bernoulli", [&] { return transport_bernoulli(ch, box, p.minus, p.background, hat.shock); });

    const IterateDerivatives deriv = stage("vorticity", [&] { return IterateDerivatives::make(ops, hat); });
    const TransformDefects defects =
        stage("vorticity", [&] { return transform_defects(box, p.background, tables, ops, hat, deriv); });
    out.omega = stage("vorticity", [&] {
        Field2 g4 = defects.H1.slice(0);
        for (double& v : g4.values()) v = -v;
        const Field2 R6 = vorticity_boundary(p.jump, box, fk, g4);
        return transport_vorticity(ch, box, R6);
    });

    out.R4 = stage("entropy", [&] { return entropy_remainder(ch, box, p.coeffs, hat.shock, fk.R1, fk.R2); });

    out.sources = stage("sources", [&] {
        const Field3 F = deformation_nonlinearity(box, p.background, tables, ops, hat, deriv);
        return curl_sources(box, tables, ops, hat, defects, F, out.omega, V5, out.R4);
    });

    out.pi = stage("poisson", [&] { return p.elliptic.solve_pi(out.sources.G1, out.sources.G2, out.sources.G3); });
    out.div_curl = stage("div-curl", [&] { return p.elliptic.solve_div_curl(out.pi); });

    out.q5 = stage("shock-poisson", [&] {
        return shock_poisson_data(p.jump, box, fk, out.div_curl.v2.slice(0), out.div_curl.v3.slice(0));
    });
    out.shock_poisson = stage("shock-poisson", [&] { return p.elliptic.solve_m1(out.q5); });

    out.q4 = stage("exit", [&] {
        return exit_data(p.jump, face(hat, N), V5.slice(N), out.R4.slice(N), p.exit_perturbation, p.eps);
    });

    const VelocityField vel = stage("potential", [&] {
        const Field3 dV1 = diff4(out.div_curl.v1, 0, h1);
        const Field2& m1 = out.shock_poisson.m1;
        Field3 G5(box);
        for (int i = 0; i <= N; ++i) {
            const double kap = tables.bernoulli_source_y[i], M2 = tables.mach_sq_y[i], d2 = tables.first_order_y[i];
            const double w = p.elliptic.nonlocal()[i] / p.coeffs.a3;
            for (int j = 0; j < box.nt(); ++j)
                for (int k = 0; k < box.nz(); ++k) {
                    const std::size_t n = G5.index(i, j, k);
                    G5[n] = kap * V5[n] + out.sources.G0[n] + M2 * dV1[n] - d2 * out.div_curl.v1[n] + w * m1(j, k);
                }
        }
        out.potential = p.elliptic.solve_potential(G5, out.shock_poisson.modes, out.q4);
        return p.elliptic.assemble_velocity(out.potential, out.div_curl);
    });

    PerturbationField& next = out.next;
    next.V[kRadial] = vel.v1;
    next.V[kAngular] = vel.v2;
    next.V[kAxial] = vel.v3;
    next.V[kBernoulli] = std::move(V5);
    next.V[kEntropy] =
        stage("entropy", [&] { return transport_entropy(box, p.coeffs, vel.v1.slice(0), out.R4); });
    next.shock = stage("shock", [&] {
        Field2 v6 = update_shock(p.jump, vel.v1.slice(0), fk.R1);
        return refine_shock(p.jump, box, std::move(v6), vel.v2.slice(0), vel.v3.slice(0), fk);
    });
    return out;
}

NormScales NormScales::of(const Problem& p) {
    NormScales s;
    const double rs = p.background.shock_radius();
    s.velocity = p.background.speed(rs);
    s.entropy = p.background.downstream_entropy();
    s.bernoulli = p.background.bernoulli();
    s.length = p.background.geometry().r_exit - p.background.geometry().r_inlet;
    return s;
}

namespace {

// Sup norms of a field and its derivatives up to the given order, each
// derivative scaled by the length; the angular one is taken per unit arc at r_s.
double field_norm(const Box& box, const Field3& f, int order, double L) {
    const double h[3] = {box.radial.step(), box.angular.step(), box.axial.step()};
    const double metric[3] = {1.0, 1.0 / box.radial.lo, 1.0};
    double total = max_abs(f);
    std::vector<std::pair<Field3, double>> level = {{f, 1.0}};
    for (int o = 1; o <= order; ++o) {
        std::vector<std::pair<Field3, double>> next;
        double m = 0.0;
        for (const auto& [g, scale] : level)
            for (int a = 0; a < 3; ++a) {
                Field3 d = diff(g, a, h[a]);
                const double sc = scale * metric[a] * L;
                m = std::max(m, sc * max_abs(d));
                if (o < order) next.emplace_back(std::move(d), sc);
            }
        total += m;
        level = std::move(next);
    }
    return total;
}

double surface_norm(const Box& box, const ShockSurface& s, int order, double L) {
    const double h[2] = {box.angular.step(), box.axial.step()};
    const double metric[2] = {1.0 / box.radial.lo, 1.0};
    double total = max_abs(s.value) / L;
    double m1 = 0.0;
    for (std::size_t n = 0; n < s.value.size(); ++n)
        m1 = std::max({m1, std::abs(s.grad2.values()[n]) * metric[0], std::abs(s.grad3.values()[n])});
    total += m1;
    std::vector<std::pair<Field2, double>> level = {{s.grad2, metric[0]}, {s.grad3, 1.0}};
    for (int o = 2; o <= order; ++o) {
        std::vector<std::pair<Field2, double>> next;
        double m = 0.0;
        for (const auto& [g, scale] : level)
            for (int a = 0; a < 2; ++a) {
                Field2 d = diff(g, a, h[a]);
                const double sc = scale * metric[a] * L;
                m = std::max(m, sc * max_abs(d));
                if (o < order) next.emplace_back(std::move(d), sc);
            }
        total += m;
        level = std::move(next);
    }
    return total;
}

double combined_norm(const Box& box, const PerturbationField& f, const NormScales& s, int order) {
    const double scale[5] = {s.velocity, s.velocity, s.velocity, s.entropy, s.bernoulli};
    double m = 0.0;
    for (int v = 0; v < 5; ++v) m = std::max(m, field_norm(box, f.V[v], order, s.length) / scale[v]);
    return std::max(m, surface_norm(box, f.shock, order + 1, s.length));
}

Field2 lerp(const Field2& a, const Field2& b, double t) {
    Field2 out = a;
    for (std::size_t n = 0; n < out.size(); ++n) out.values()[n] += t * (b.values()[n] - a.values()[n]);
    return out;
}

Field3 lerp(const Field3& a, const Field3& b, double t) {
    Field3 out = a;
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += t * (b[n] - a[n]);
    return out;
}

}  // namespace

double w_norm(const Box& box, const PerturbationField& f, const NormScales& s) {
    return combined_norm(box, f, s, 1);
}

double x_norm(const Box& box, const PerturbationField& f, const NormScales& s) {
    return combined_norm(box, f, s, 2);
}

PerturbationField blend(const PerturbationField& a, const PerturbationField& b, double t) {
    PerturbationField out;
    for (int v = 0; v < 5; ++v) out.V[v] = lerp(a.V[v], b.V[v], t);
    out.shock.value = lerp(a.shock.value, b.shock.value, t);
    out.shock.grad2 = lerp(a.shock.grad2, b.shock.grad2, t);
    out.shock.grad3 = lerp(a.shock.grad3, b.shock.grad3, t);
    return out;
}

PerturbationField difference(const PerturbationField& a, const PerturbationField& b) {
    PerturbationField out = a;
    auto sub = [](std::vector<double>& x, const std::vector<double>& y) {
        for (std::size_t n = 0; n < x.size(); ++n) x[n] -= y[n];
    };
    for (int v = 0; v < 5; ++v) sub(out.V[v].values(), b.V[v].values());
    sub(out.shock.value.values(), b.shock.value.values());
    sub(out.shock.grad2.values(), b.shock.grad2.values());
    sub(out.shock.grad3.values(), b.shock.grad3.values());
    return out;
}

std::string error_kind(const std::exception& e) {
#define TRANSONIC_KIND(Name) \
    if (dynamic_cast<const Name*>(&e)) return #Name
    TRANSONIC_KIND(VacuumBracket);
    TRANSONIC_KIND(NoBranchRoot);
    TRANSONIC_KIND(SonicDegeneracy);
    TRANSONIC_KIND(NotSupersonic);
    TRANSONIC_KIND(IncompatibleMode);
    TRANSONIC_KIND(MarchBreakdown);
    TRANSONIC_KIND(OutOfDomain);
    TRANSONIC_KIND(DegenerateJ);
    TRANSONIC_KIND(CharacteristicEscape);
    TRANSONIC_KIND(StagnationFloor);
    TRANSONIC_KIND(LinearSolveFailure);
    TRANSONIC_KIND(SolvabilityViolation);
    TRANSONIC_KIND(SuperpositionDegenerate);
    TRANSONIC_KIND(CompatibilityViolation);
    TRANSONIC_KIND(TrustRadiusExceeded);
    TRANSONIC_KIND(NoContraction);
    TRANSONIC_KIND(ConfigError);
    TRANSONIC_KIND(ExitPressureOutOfRange);
    TRANSONIC_KIND(ModalSolveFailure);
    TRANSONIC_KIND(SolverError);
#undef TRANSONIC_KIND
    return "Error";
}

RunReport iterate(const Problem& p, const IterationOptions& opt, bool verify) {
    RunReport report;
    const NormScales scales = NormScales::of(p);
    report.trust_radius = std::sqrt(p.eps * p.data_norm);
    PerturbationField hat = PerturbationField::zero(p.box);
    double previous = 0.0;
    int growing = 0;
    try {
        for (int n = 1; n <= opt.max_iters; ++n) {
            const auto t0 = std::chrono::steady_clock::now();
            StepResult step = apply_T(p, hat);
            PerturbationField next = opt.relaxation == 1.0 ? step.next : blend(hat, step.next, opt.relaxation);
            IterationRecord rec;
            rec.iteration = n;
            rec.update_w = w_norm(p.box, difference(next, hat), scales);
            rec.ratio = (n > 1 && previous > 0.0) ? rec.update_w / previous : 0.0;
            rec.x_norm = x_norm(p.box, next, scales);
            rec.w_norm = w_norm(p.box, next, scales);
            rec.pi_max = max_abs(step.pi.pi);
            rec.q5_integral = step.shock_poisson.q5_integral;
            rec.source_divergence = step.div_curl.source_divergence;
            rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            report.history.push_back(rec);
            report.iterations = n;
            hat = std::move(next);
            report.last = std::move(step);
            // rounding noise of the background (eps = 0) must not trip the check
            if (opt.enforce_trust_radius && rec.x_norm > report.trust_radius + 1e-12) {
                throw TrustRadiusExceeded(
                    fmt::format("iterate norm {:.4e} exceeds the trust radius {:.4e}", rec.x_norm,
                                report.trust_radius),
                    "iterate");
            }
            if (rec.update_w < opt.tolerance) {
                report.converged = true;
                break;
            }
            growing = rec.ratio > 1.0 ? growing + 1 : 0;
            if (growing >= 3) {
                throw NoContraction(
                    fmt::format("update ratio above 1 for 3 consecutive iterations (last {:.4f})", rec.ratio),
                    "iterate");
            }
            previous = rec.update_w;
        }
    } catch (const SolverError& e) {
        report.failure_kind = error_kind(e);
        report.failure_message = e.what();
        report.failure_stage = e.stage();
    }
    report.solution = std::move(hat);
    if (verify && report.converged) {
        const double residual = report.history.back().update_w;
        report.verification = verify_solution(p, report.solution, report.last, residual);
    }
    return report;
}

}  // namespace transonic

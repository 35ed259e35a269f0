#include "transonic/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "transonic/errors.hpp"

namespace transonic {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    return out;
}

void log_line(const RunOptions& opt, const std::string& s) {
    if (opt.log) *opt.log << s << '\n' << std::flush;
}

std::string join(const std::string& dir, const char* name) { return (std::filesystem::path(dir) / name).string(); }

}  // namespace

SweepTable sweep_exit_pressure(const RunConfig& c, const std::vector<double>& pressures) {
    const InflowBackground inflow = config_inflow(c);
    SweepTable t;
    t.admissible = admissible_exit_pressures(inflow);
    std::optional<double> prev_p, prev_r;
    for (double p : pressures) {
        SweepRow row;
        row.exit_pressure = p;
        try {
            row.shock_radius = find_shock_radius(inflow, p);
        } catch (const SolverError& e) {
            row.error = fmt::format("{}: {}", error_kind(e), e.what());
        }
        if (row.shock_radius) {
            if (prev_p && prev_r) {
                const double dp = p - *prev_p, dr = *row.shock_radius - *prev_r;
                if (!(dp * dr < 0.0)) t.monotone = false;
            }
            prev_p = p;
            prev_r = row.shock_radius;
        }
        t.rows.push_back(row);
    }
    return t;
}

Verdict judge(const RunConfig& c, const RunReport& r) {
    Verdict v;
    v.converged = r.converged;
    const VerificationReport& x = r.verification;
    if (!x.evaluated) return v;
    v.rh = x.rh_max < c.solver.rh_tolerance;
    v.equations = x.euler_max < kEquationTolerance && x.decomposed_max < kEquationTolerance;
    v.solvability = std::abs(x.q5_integral) <= x.q5_quadrature_tolerance && std::abs(x.m1_integral) <= 1e-12;
    v.compatibility = true;
    for (const auto& [name, item] : x.compatibility) v.compatibility = v.compatibility && item.pass();
    return v;
}

std::string report_json(const RunConfig& c, const RunReport& r) {
    json j;
    j["config"] = {{"mode", mode_name(c.mode)},
                   {"eps", c.eps},
                   {"grid", {c.grid.radial, c.grid.angular, c.grid.axial}},
                   {"modes", {c.grid.angular_modes, c.grid.axial_modes}}};
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["trust_radius"] = r.trust_radius;
    if (!r.failure_kind.empty())
        j["failure"] = {{"kind", r.failure_kind}, {"message", r.failure_message}, {"stage", r.failure_stage}};
    json h = json::array();
    for (const auto& e : r.history)
        h.push_back({{"iteration", e.iteration},
                     {"update_w", e.update_w},
                     {"ratio", e.ratio},
                     {"x_norm", e.x_norm},
                     {"w_norm", e.w_norm},
                     {"pi_max", e.pi_max},
                     {"q5_integral", e.q5_integral},
                     {"source_divergence", e.source_divergence},
                     {"seconds", e.seconds}});
    j["history"] = h;
    const VerificationReport& x = r.verification;
    if (x.evaluated) {
        json v;
        v["rh"] = x.rh;
        v["rh_max"] = x.rh_max;
        v["euler"] = x.euler;
        v["euler_max"] = x.euler_max;
        v["decomposed"] = x.decomposed;
        v["decomposed_max"] = x.decomposed_max;
        v["shock_gradient"] = {{"angular", x.shock_gradient_angular}, {"axial", x.shock_gradient_axial}};
        v["pi_max"] = x.pi_max;
        v["q5_integral"] = x.q5_integral;
        v["q5_quadrature_tolerance"] = x.q5_quadrature_tolerance;
        v["m1_integral"] = x.m1_integral;
        v["fixed_point_residual"] = x.fixed_point_residual;
        json comp;
        for (const auto& [name, item] : x.compatibility)
            comp[name] = {{"value", item.value}, {"tolerance", item.tolerance}, {"pass", item.pass()}};
        v["compatibility"] = comp;
        const Verdict d = judge(c, r);
        v["verdict"] = {{"converged", d.converged},
                        {"rh", d.rh},
                        {"equations", d.equations},
                        {"solvability", d.solvability},
                        {"compatibility", d.compatibility},
                        {"all", d.all()}};
        j["verification"] = v;
    }
    return j.dump(2);
}

void write_history_csv(const RunReport& r, const std::string& path) {
    auto out = open_out(path);
    out << "iteration,update_w,ratio,x_norm,w_norm,pi_max,q5_integral,source_divergence,seconds\n";
    for (const auto& e : r.history)
        out << fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.6f}\n", e.iteration,
                           e.update_w, e.ratio, e.x_norm, e.w_norm, e.pi_max, e.q5_integral, e.source_divergence,
                           e.seconds);
}

void write_perturbation_csv(const Box& box, const PerturbationField& f, const std::string& path) {
    auto out = open_out(path);
    out << "y1,theta_rad,x3,r,V1_radial_velocity,V2_angular_velocity,V3_axial_velocity,V4_entropy,V5_bernoulli\n";
    for (int i = 0; i < box.nr(); ++i)
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) {
                const double y1 = box.radial.x(i);
                out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}", y1, box.angular.x(j), box.axial.x(k),
                                   to_physical(box, y1, f.shock.value(j, k)));
                for (int v = 0; v < 5; ++v) out << fmt::format(",{:.17g}", f.V[v](i, j, k));
                out << '\n';
            }
}

void write_kernels_csv(const Box& box, const FaceKernels& k, const std::string& path) {
    auto out = open_out(path);
    out << "theta_rad,x3,J,g2,g3,R01,R02,R03,R1,R2,q1,q2,q3\n";
    for (int j = 0; j < box.nt(); ++j)
        for (int l = 0; l < box.nz(); ++l) {
            out << fmt::format("{:.17g},{:.17g}", box.angular.x(j), box.axial.x(l));
            for (const Field2* f : {&k.J, &k.g2, &k.g3, &k.R01, &k.R02, &k.R03, &k.R1, &k.R2, &k.q1, &k.q2, &k.q3})
                out << fmt::format(",{:.17g}", (*f)(j, l));
            out << '\n';
        }
}

namespace {

int run_background(const RunConfig& c, const RunOptions& opt) {
    const InflowBackground inflow = config_inflow(c);
    const double rs = config_shock_radius(c, inflow);
    const BackgroundSolution bg(inflow, rs);
    const BackgroundCoefficients co(bg);
    const auto [p1, p2] = admissible_exit_pressures(inflow);
    auto out = open_out(join(c.output, "background.csv"));
    out << "r,branch,density,speed,pressure,mach\n";
    const int n = 200;
    const double r1 = c.geometry.r_inlet, r2 = c.geometry.r_exit;
    for (int i = 0; i <= n; ++i) {
        const double r = r1 + (r2 - r1) * i / n;
        const RadialProfile u = bg.upstream(r);
        out << fmt::format("{:.17g},supersonic,{:.17g},{:.17g},{:.17g},{:.17g}\n", r, u.density, u.speed, u.pressure,
                           std::sqrt(u.mach_sq));
    }
    for (int i = 0; i <= n; ++i) {
        const double r = rs + (r2 - rs) * i / n;
        const RadialProfile d = bg.downstream(r);
        out << fmt::format("{:.17g},subsonic,{:.17g},{:.17g},{:.17g},{:.17g}\n", r, d.density, d.speed, d.pressure,
                           std::sqrt(d.mach_sq));
    }
    json j;
    j["shock_radius"] = rs;
    j["exit_pressure"] = bg.pressure(r2);
    j["admissible_exit_pressures"] = {p1, p2};
    j["jump_residual"] = bg.jump_residual();
    j["bernoulli"] = bg.bernoulli();
    j["entropy"] = {{"upstream", bg.upstream_entropy()}, {"downstream", bg.downstream_entropy()}};
    j["shock_constants"] = {{"a0", co.a0}, {"a1", co.a1}, {"a2", co.a2}, {"a3", co.a3}, {"a4", co.a4}};
    open_out(join(c.output, "background.json")) << j.dump(2) << '\n';
    log_line(opt, fmt::format("background: r_s = {:.12g}, exit pressure = {:.12g}, admissible ({:.6g}, {:.6g})", rs,
                              bg.pressure(r2), p1, p2));
    return 0;
}

int run_inflow(const RunConfig& c, const RunOptions& opt) {
    const InflowBackground inflow = config_inflow(c);
    const Box box = config_box(c, config_shock_radius(c, inflow));
    const SupersonicField f = config_supersonic(c, inflow, box);
    write_field_csv(f, join(c.output, "inflow.csv"));
    const MarchDiagnostics& d = f.diagnostics;
    json j = {{"max_perturbation", d.max_perturbation},
              {"min_mach", d.min_mach},
              {"substeps", d.substeps},
              {"angular_wall", {{"slope", d.angular_wall_slope}, {"value", d.angular_wall_value},
                                {"curvature", d.angular_wall_curvature}}},
              {"axial_wall", {{"slope", d.axial_wall_slope}, {"value", d.axial_wall_value},
                              {"curvature", d.axial_wall_curvature}}},
              {"euler_residual", d.euler_residual}};
    open_out(join(c.output, "inflow.json")) << j.dump(2) << '\n';
    log_line(opt, fmt::format("inflow: min Mach {:.6g}, max perturbation {:.3e}, {} substeps", d.min_mach,
                              d.max_perturbation, d.substeps));
    return 0;
}

int run_full(const RunConfig& c, const RunOptions& opt, bool strict) {
    const Problem p = config_problem(c);
    const RunReport r = iterate(p, config_iteration(c), true);
    for (const auto& e : r.history)
        log_line(opt, fmt::format("iter {:2d}  update_w {:.3e}  ratio {:.3f}  x_norm {:.3e}  pi {:.2e}  {:.2f}s",
                                  e.iteration, e.update_w, e.ratio, e.x_norm, e.pi_max, e.seconds));
    write_history_csv(r, join(c.output, "history.csv"));
    write_perturbation_csv(p.box, r.solution, join(c.output, "perturbation.csv"));
    write_shock_csv(p.box, r.solution.shock, join(c.output, "shock.csv"));
    if (opt.dump_kernels && r.last.kernels.J.size() > 0)
        write_kernels_csv(p.box, r.last.kernels, join(c.output, "kernels.csv"));
    open_out(join(c.output, "report.json")) << report_json(c, r) << '\n';
    if (!r.converged) {
        log_line(opt, fmt::format("not converged: {} [{}] {}", r.failure_kind, r.failure_stage, r.failure_message));
        return 1;
    }
    const Verdict v = judge(c, r);
    log_line(opt, fmt::format("converged in {} iterations; rh {:.2e}, euler {:.2e}, decomposed {:.2e}, verdict {}",
                              r.iterations, r.verification.rh_max, r.verification.euler_max,
                              r.verification.decomposed_max, v.all() ? "pass" : "fail"));
    return strict && !v.all() ? 1 : 0;
}

int run_sweep(const RunConfig& c, const RunOptions& opt) {
    const SweepTable t = sweep_exit_pressure(c, c.sweep_pressures);
    auto out = open_out(join(c.output, "sweep.csv"));
    out << "exit_pressure,shock_radius,error\n";
    bool ok = t.monotone;
    for (const auto& row : t.rows) {
        out << fmt::format("{:.17g},{},{}\n", row.exit_pressure,
                           row.shock_radius ? fmt::format("{:.17g}", *row.shock_radius) : "", row.error);
        ok = ok && row.shock_radius.has_value();
        log_line(opt, row.shock_radius ? fmt::format("P_e {:.8g} -> r_s {:.12g}", row.exit_pressure, *row.shock_radius)
                                       : fmt::format("P_e {:.8g}: {}", row.exit_pressure, row.error));
    }
    log_line(opt, fmt::format("admissible ({:.8g}, {:.8g}), monotone: {}", t.admissible.first, t.admissible.second,
                              t.monotone));
    return ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& c, const RunOptions& opt) {
    c.validate();
    std::filesystem::create_directories(c.output);
    open_out(join(c.output, "config.ini")) << serialize_config(c);
    switch (c.mode) {
        case RunMode::background: return run_background(c, opt);
        case RunMode::inflow: return run_inflow(c, opt);
        case RunMode::full: return run_full(c, opt, false);
        case RunMode::verify: return run_full(c, opt, true);
        case RunMode::sweep: return run_sweep(c, opt);
    }
    return 2;
}

}  // namespace transonic

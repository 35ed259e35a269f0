#include "transonic/background.hpp"

#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "transonic/errors.hpp"

namespace transonic {

namespace {

constexpr double kSonicTol = 1e-9;

double branch_mach(const GasModel& gas, double K, const BranchPoint& p) {
    return p.speed / std::sqrt(sound_speed_sq(gas, p.density, K));
}

}  // namespace

BranchPoint solve_branch(const GasModel& gas, double m, double B, double K, double r, Branch branch,
                         bool allow_sonic) {
    if (!(r > 0.0) || !(K > 0.0) || !(B > 0.0) || m < 0.0) {
        throw NoBranchRoot(fmt::format("invalid branch data m={} B={} K={} r={}", m, B, K, r));
    }
    const double g = gas.gamma;
    const double h = gas.enthalpy_factor();
    const double stagnation = std::pow(B / (h * K), 1.0 / (g - 1.0));
    if (m == 0.0) {
        if (branch == Branch::subsonic) return {stagnation, 0.0};
        throw NoBranchRoot("no supersonic root for zero mass flux");
    }
    const double mr2 = m * m / (r * r);
    auto residual = [&](double rho) { return 0.5 * mr2 / (rho * rho) + h * K * std::pow(rho, g - 1.0) - B; };
    auto with_slope = [&](double rho) {
        const double f = 0.5 * mr2 / (rho * rho) + h * K * std::pow(rho, g - 1.0) - B;
        const double df = -mr2 / (rho * rho * rho) + g * K * std::pow(rho, g - 2.0);
        return std::make_pair(f, df);
    };

    // the residual is convex in rho with its minimum at the sonic density
    const double sonic = std::pow(mr2 / (g * K), 1.0 / (g + 1.0));
    const double fmin = residual(sonic);
    if (fmin > 1e-13 * B) {
        throw NoBranchRoot(fmt::format("no branch root at r={:.6g}: flow would be choked", r));
    }
    if (fmin > -1e-13 * B) {
        if (allow_sonic) return {sonic, m / (sonic * r)};
        throw SonicDegeneracy(fmt::format("branches coincide at r={:.6g}", r));
    }

    double lo, hi;
    if (branch == Branch::supersonic) {
        hi = sonic;
        lo = 0.5 * sonic;
        while (residual(lo) <= 0.0) lo *= 0.5;
    } else {
        lo = sonic;
        hi = stagnation;
    }
    boost::uintmax_t iters = 200;
    const double rho = boost::math::tools::newton_raphson_iterate(
        with_slope, 0.5 * (lo + hi), lo, hi, std::numeric_limits<double>::digits - 2, iters);
    BranchPoint p{rho, m / (rho * r)};
    const double M = branch_mach(gas, K, p);
    if (!allow_sonic && std::abs(M - 1.0) < kSonicTol) {
        throw SonicDegeneracy(fmt::format("sonic state at r={:.6g}", r));
    }
    return p;
}

FlowState jump_downstream(const GasModel& gas, const FlowState& minus) {
    if (minus.u_theta != 0.0 || minus.u_z != 0.0) {
        throw NotSupersonic("jump_downstream expects a purely radial upstream state");
    }
    const double M = mach(gas, minus);
    if (M < 1.0 - kSonicTol) {
        throw NotSupersonic(fmt::format("upstream Mach {:.6g} is not supersonic", M));
    }
    if (M <= 1.0 + kSonicTol) return minus;

    // The downstream speed is the other root of
    // alpha U^2 - (gamma f / ((gamma-1) m)) U + B = 0, alpha = (gamma+1)/(2(gamma-1)),
    // whose product of roots is B/alpha.
    const double g = gas.gamma;
    const double alpha = (g + 1.0) / (2.0 * (g - 1.0));
    const double B = bernoulli(gas, minus);
    const double U = minus.u_r;
    const double Up = B / (alpha * U);
    const double flux = minus.density * U;
    const double rho_p = flux / Up;
    const double P_p = pressure(gas, minus) + flux * (U - Up);
    FlowState plus;
    plus.u_r = Up;
    plus.density = rho_p;
    plus.entropy_K = P_p / std::pow(rho_p, g);
    return plus;
}

InflowBackground make_inflow_background(const GasModel& gas, const NozzleGeometry& geo,
                                        const InletState& inlet) {
    const double c = std::sqrt(sound_speed_sq(gas, inlet.density, inlet.entropy_K));
    FlowState s;
    s.u_r = inlet.mach * c;
    s.density = inlet.density;
    s.entropy_K = inlet.entropy_K;
    InflowBackground bg;
    bg.gas = gas;
    bg.geometry = geo;
    bg.supersonic.mass_flux_m = s.density * s.u_r * geo.r_inlet;
    bg.supersonic.B = bernoulli(gas, s);
    bg.supersonic.K = inlet.entropy_K;
    bg.supersonic.branch = Branch::supersonic;
    bg.supersonic.r_lo = geo.r_inlet;
    bg.supersonic.r_hi = geo.r_exit;
    return bg;
}

namespace {

double exit_pressure_closed(const InflowBackground& bg, double r_s) {
    const auto& up = bg.supersonic;
    const BranchPoint p = solve_branch(bg.gas, up.mass_flux_m, up.B, up.K, r_s, Branch::supersonic);
    FlowState minus;
    minus.u_r = p.speed;
    minus.density = p.density;
    minus.entropy_K = up.K;
    const FlowState plus = jump_downstream(bg.gas, minus);
    const BranchPoint e = solve_branch(bg.gas, up.mass_flux_m, up.B, plus.entropy_K,
                                       bg.geometry.r_exit, Branch::subsonic);
    return plus.entropy_K * std::pow(e.density, bg.gas.gamma);
}

}  // namespace

double exit_pressure_of_shock(const InflowBackground& bg, double r_s) {
    if (!(r_s > bg.geometry.r_inlet) || !(r_s < bg.geometry.r_exit)) {
        throw OutOfDomain(fmt::format("shock radius {:.6g} outside ({}, {})", r_s,
                                      bg.geometry.r_inlet, bg.geometry.r_exit));
    }
    return exit_pressure_closed(bg, r_s);
}

std::pair<double, double> admissible_exit_pressures(const InflowBackground& bg) {
    return {exit_pressure_closed(bg, bg.geometry.r_exit), exit_pressure_closed(bg, bg.geometry.r_inlet)};
}

double find_shock_radius(const InflowBackground& bg, double Pe) {
    const auto [P1, P2] = admissible_exit_pressures(bg);
    if (!(Pe > P1) || !(Pe < P2)) {
        throw ExitPressureOutOfRange(
            fmt::format("exit pressure {:.10g} outside admissible interval ({:.10g}, {:.10g})", Pe, P1, P2),
            P1, P2);
    }
    const double r1 = bg.geometry.r_inlet;
    const double r2 = bg.geometry.r_exit;
    auto f = [&](double r) { return exit_pressure_closed(bg, r) - Pe; };
    auto tol = [](double a, double b) { return std::abs(b - a) < 1e-14; };
    boost::uintmax_t iters = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(f, r1, r2, P2 - Pe, P1 - Pe, tol, iters);
    return 0.5 * (a + b);
}

BackgroundSolution::BackgroundSolution(const InflowBackground& inflow, double r_s)
    : gas_(inflow.gas), geo_(inflow.geometry), up_(inflow.supersonic), r_s_(r_s) {
    if (!(r_s > geo_.r_inlet) || !(r_s < geo_.r_exit)) {
        throw OutOfDomain(fmt::format("shock radius {:.6g} outside the nozzle", r_s));
    }
    const BranchPoint p = solve_branch(gas_, up_.mass_flux_m, up_.B, up_.K, r_s, Branch::supersonic);
    FlowState minus;
    minus.u_r = p.speed;
    minus.density = p.density;
    minus.entropy_K = up_.K;
    const FlowState plus = jump_downstream(gas_, minus);
    down_ = RadialBranch{up_.mass_flux_m, up_.B, plus.entropy_K, Branch::subsonic, r_s, geo_.r_exit};
    if (!(down_.K > up_.K)) {
        throw SolverError("entropy condition violated across the background shock");
    }
}

RadialProfile BackgroundSolution::profile(const RadialBranch& b, double r) const {
    const BranchPoint p = solve_branch(gas_, b.mass_flux_m, b.B, b.K, r, b.branch);
    RadialProfile out;
    out.r = r;
    out.density = p.density;
    out.speed = p.speed;
    out.pressure = b.K * std::pow(p.density, gas_.gamma);
    out.sound_sq = sound_speed_sq(gas_, p.density, b.K);
    out.mach_sq = p.speed * p.speed / out.sound_sq;
    out.speed_slope = out.sound_sq * p.speed / (r * (p.speed * p.speed - out.sound_sq));
    out.density_slope = -p.density * (out.speed_slope / p.speed + 1.0 / r);
    out.pressure_slope = out.sound_sq * out.density_slope;
    return out;
}

RadialProfile BackgroundSolution::upstream(double r) const { return profile(up_, r); }
RadialProfile BackgroundSolution::downstream(double r) const { return profile(down_, r); }

double BackgroundSolution::speed(double r) const { return downstream(r).speed; }
double BackgroundSolution::speed_slope(double r) const { return downstream(r).speed_slope; }
double BackgroundSolution::density(double r) const { return downstream(r).density; }
double BackgroundSolution::pressure(double r) const { return downstream(r).pressure; }
double BackgroundSolution::sound_sq(double r) const { return downstream(r).sound_sq; }

std::vector<double> BackgroundSolution::jump_residual() const {
    const RadialProfile a = upstream(r_s_);
    const RadialProfile b = downstream(r_s_);
    const double h = gas_.enthalpy_factor();
    const double Ba = 0.5 * a.speed * a.speed + h * up_.K * std::pow(a.density, gas_.gamma - 1.0);
    const double Bb = 0.5 * b.speed * b.speed + h * down_.K * std::pow(b.density, gas_.gamma - 1.0);
    return {b.density * b.speed - a.density * a.speed,
            b.density * b.speed * b.speed + b.pressure - a.density * a.speed * a.speed - a.pressure,
            Bb - Ba};
}

std::array<std::array<double, 3>, 3> shock_system_matrix(const BackgroundSolution& bg) {
    const RadialProfile p = bg.downstream(bg.shock_radius());
    const double g = bg.gas().gamma;
    const double rho = p.density, U = p.speed, c2 = p.sound_sq;
    return {{{rho, U, 0.0},
             {2.0 * rho * U, U * U + c2, std::pow(rho, g)},
             {U, c2 / rho, g * std::pow(rho, g - 1.0) / (g - 1.0)}}};
}

BackgroundCoefficients::BackgroundCoefficients(const BackgroundSolution& bg) : bg_(bg) {
    const double rs = bg.shock_radius();
    const double g = bg.gas().gamma;
    const RadialProfile plus = bg.downstream(rs);
    const RadialProfile minus = bg.upstream(rs);
    const double rho = plus.density, U = plus.speed, c2 = plus.sound_sq;
    pressure_jump = plus.pressure - minus.pressure;
    a0 = rho * U / pressure_jump;
    a1 = g * U * pressure_jump / (rs * rho * (c2 - U * U));
    a2 = (g - 1.0) * pressure_jump / (rs * std::pow(rho, g));
    a3 = ((g - 1.0) * plus.mach_sq + 1.0) / (g * plus.mach_sq);
    a4 = a0 * a1 * a3;

    const double den = rho * (c2 - U * U);
    b1_ = {(c2 + g * U * U) / den, -g * U / den, (g - 1.0) * rho * U / den};
    const double s = (g - 1.0) / std::pow(rho, g);
    b2_ = {s * U, -s, s * rho};

    if (!(a0 > 0 && a1 > 0 && a2 > 0 && a3 > 0 && a4 > 0)) {
        throw SolverError("background coefficient positivity violated");
    }
}

double BackgroundCoefficients::ellipticity(double r) const { return 1.0 - bg_.downstream(r).mach_sq; }

double BackgroundCoefficients::ellipticity_slope(double r) const {
    const RadialProfile p = bg_.downstream(r);
    const double B = bg_.bernoulli();
    const double g = bg_.gas().gamma;
    const double h = B - 0.5 * p.speed * p.speed;
    return -2.0 * p.speed * B / ((g - 1.0) * h * h) * p.speed_slope;
}

double BackgroundCoefficients::first_order(double r) const {
    const double M2 = bg_.downstream(r).mach_sq;
    const double g = bg_.gas().gamma;
    return M2 * (2.0 + (g - 1.0) * M2) / (r * (1.0 - M2));
}

double BackgroundCoefficients::entropy_weight(double r) const {
    const double U = bg_.speed(r);
    return (bg_.bernoulli() - 0.5 * U * U) / (bg_.gas().gamma * bg_.downstream_entropy() * U);
}

double BackgroundCoefficients::entropy_coupling(double r) const { return a2 / a1 * entropy_weight(r); }

double BackgroundCoefficients::entropy_coupling_slope(double r) const {
    const RadialProfile p = bg_.downstream(r);
    const double B = bg_.bernoulli();
    return -(a2 / a1) / (bg_.gas().gamma * bg_.downstream_entropy()) * p.speed_slope *
           (B + 0.5 * p.speed * p.speed) / (p.speed * p.speed);
}

double BackgroundCoefficients::nonlocal_weight(double r) const {
    return ellipticity(r) * entropy_coupling_slope(r) + (1.0 / r + first_order(r)) * entropy_coupling(r);
}

double BackgroundCoefficients::drift(double r) const {
    return 1.0 / r + first_order(r) - ellipticity_slope(r);
}

double BackgroundCoefficients::bernoulli_source(double r) const {
    const RadialProfile p = bg_.downstream(r);
    return -(bg_.gas().gamma - 1.0) * (p.speed_slope + p.speed / r) / p.sound_sq;
}

}  // namespace transonic

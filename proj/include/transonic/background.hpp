#pragma once

#include <array>
#include <numbers>
#include <utility>
#include <vector>

#include "transonic/gas.hpp"

namespace transonic {

struct NozzleGeometry {
    double r_inlet = 1.0;
    double r_exit = 2.0;
    double half_angle = std::numbers::pi / 6.0;
    double z_half = 1.0;  // x3 runs over (-z_half, z_half)
};

struct InletState {
    double density = 1.0;
    double entropy_K = 1.0;
    double mach = 2.0;
};

enum class Branch { supersonic, subsonic };

// Radial flow with rho*U*r = m, Bernoulli constant B and entropy K.
struct RadialBranch {
    double mass_flux_m = 0.0;
    double B = 0.0;
    double K = 1.0;
    Branch branch = Branch::supersonic;
    double r_lo = 0.0;
    double r_hi = 0.0;
};

struct BranchPoint {
    double density;
    double speed;
};

BranchPoint solve_branch(const GasModel& gas, double m, double B, double K, double r, Branch branch,
                         bool allow_sonic = false);

// Normal-shock jump of a purely radial supersonic state.
FlowState jump_downstream(const GasModel& gas, const FlowState& minus);

// Everything upstream of the shock: fixed by the inlet state and the nozzle.
struct InflowBackground {
    GasModel gas;
    NozzleGeometry geometry;
    RadialBranch supersonic;
};

InflowBackground make_inflow_background(const GasModel& gas, const NozzleGeometry& geo,
                                        const InletState& inlet);

double exit_pressure_of_shock(const InflowBackground& bg, double r_s);

// (P1, P2): exit pressures for the shock at the exit and at the inlet.
std::pair<double, double> admissible_exit_pressures(const InflowBackground& bg);

double find_shock_radius(const InflowBackground& bg, double exit_pressure);

// Pointwise values of one branch at radius r, with radial slopes.
struct RadialProfile {
    double r;
    double density;
    double speed;
    double pressure;
    double sound_sq;
    double mach_sq;
    double speed_slope;
    double density_slope;
    double pressure_slope;
};

class BackgroundSolution {
public:
    BackgroundSolution(const InflowBackground& inflow, double shock_radius);

    const GasModel& gas() const { return gas_; }
    const NozzleGeometry& geometry() const { return geo_; }
    const RadialBranch& upstream_branch() const { return up_; }
    const RadialBranch& downstream_branch() const { return down_; }
    double shock_radius() const { return r_s_; }
    double bernoulli() const { return up_.B; }
    double upstream_entropy() const { return up_.K; }
    double downstream_entropy() const { return down_.K; }

    RadialProfile upstream(double r) const;
    RadialProfile downstream(double r) const;

    // Shorthands on the downstream branch used everywhere in the scheme.
    double speed(double r) const;
    double speed_slope(double r) const;
    double density(double r) const;
    double pressure(double r) const;
    double sound_sq(double r) const;

    // Residuals of the three 1D jump conditions at the shock.
    std::vector<double> jump_residual() const;

private:
    RadialProfile profile(const RadialBranch& b, double r) const;

    GasModel gas_;
    NozzleGeometry geo_;
    RadialBranch up_;
    RadialBranch down_;
    double r_s_;
};

// Constants and radial coefficient functions of the linearized problem.
class BackgroundCoefficients {
public:
    explicit BackgroundCoefficients(const BackgroundSolution& bg);

    // Shock-face constants.
    double a0;  // (rho U)(r_s) / [P](r_s)
    double a1;  // shock displacement -> radial velocity
    double a2;  // shock displacement -> entropy
    double a3;  // ((gamma-1) M^2 + 1)/(gamma M^2) at r_s
    double a4;  // a0 a1 a3, the Robin coefficient

    double pressure_jump;  // [P](r_s) > 0

    double ellipticity(double r) const;         // 1 - M^2
    double ellipticity_slope(double r) const;
    double first_order(double r) const;         // M^2 (2 + (gamma-1) M^2) / (r (1 - M^2))
    double entropy_coupling(double r) const;    // (a2/a1) A(r)
    double entropy_coupling_slope(double r) const;
    double nonlocal_weight(double r) const;     // multiplies the shock-face trace
    double drift(double r) const;               // 1/r + first_order - ellipticity'

    // A(r) = (B - U^2/2) / (gamma K U), the entropy weight in the vorticity relations
    double entropy_weight(double r) const;
    // coefficient of the Bernoulli perturbation in the deformation equation
    double bernoulli_source(double r) const;

    // b-rows of the inverted shock system (direct closed form).
    std::array<double, 3> velocity_row() const { return b1_; }
    std::array<double, 3> entropy_row() const { return b2_; }

    const BackgroundSolution& background() const { return bg_; }

private:
    BackgroundSolution bg_;
    std::array<double, 3> b1_{};
    std::array<double, 3> b2_{};
};

// The 3x3 matrix of the linearized jump system, rows (mass, momentum, Bernoulli),
// acting on (radial velocity, density, entropy) perturbations at r_s.
std::array<std::array<double, 3>, 3> shock_system_matrix(const BackgroundSolution& bg);

}  // namespace transonic

#pragma once

namespace transonic {

// Polytropic gas P = K rho^gamma. The EOS scale is folded into K.
struct GasModel {
    double gamma = 1.4;
    double eos_constant_A = 1.0;

    // gamma/(gamma-1), the enthalpy factor
    double enthalpy_factor() const { return gamma / (gamma - 1.0); }
};

struct FlowState {
    double u_r = 0.0;
    double u_theta = 0.0;
    double u_z = 0.0;
    double density = 1.0;
    double entropy_K = 1.0;

    double speed_sq() const { return u_r * u_r + u_theta * u_theta + u_z * u_z; }
};

// Deviation of the downstream state from the background, in the variables
// the fixed-point scheme iterates on.
struct PerturbationState {
    double u_r = 0.0;
    double u_theta = 0.0;
    double u_z = 0.0;
    double entropy = 0.0;
    double bernoulli = 0.0;
};

enum class FlowRegime { subsonic, sonic, supersonic };

double pressure(const GasModel& gas, const FlowState& s);
double sound_speed_sq(const GasModel& gas, const FlowState& s);
double sound_speed_sq(const GasModel& gas, double density, double K);
double enthalpy(const GasModel& gas, double density, double K);
double bernoulli(const GasModel& gas, const FlowState& s);

// Inverts B = q/2 + gamma/(gamma-1) K rho^(gamma-1) for rho. Throws
// VacuumBracket when B - q/2 <= 0.
double density_from_bernoulli(const GasModel& gas, double B, double K, double speed_sq);

double mach(const GasModel& gas, const FlowState& s);
FlowRegime classify(double mach_number, double sonic_tolerance = 1e-9);

}  // namespace transonic

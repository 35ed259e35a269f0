#include "transonic/gas.hpp"

#include <cmath>

#include <fmt/format.h>

#include "transonic/errors.hpp"

namespace transonic {

double pressure(const GasModel& gas, const FlowState& s) {
    return s.entropy_K * std::pow(s.density, gas.gamma);
}

double sound_speed_sq(const GasModel& gas, double density, double K) {
    return gas.gamma * K * std::pow(density, gas.gamma - 1.0);
}

double sound_speed_sq(const GasModel& gas, const FlowState& s) {
    return sound_speed_sq(gas, s.density, s.entropy_K);
}

double enthalpy(const GasModel& gas, double density, double K) {
    return gas.enthalpy_factor() * K * std::pow(density, gas.gamma - 1.0);
}

double bernoulli(const GasModel& gas, const FlowState& s) {
    return 0.5 * s.speed_sq() + enthalpy(gas, s.density, s.entropy_K);
}

double density_from_bernoulli(const GasModel& gas, double B, double K, double speed_sq) {
    const double bracket = B - 0.5 * speed_sq;
    if (!(bracket > 0.0) || !(K > 0.0)) {
        throw VacuumBracket(fmt::format("vacuum bracket: B - q/2 = {:.6g}, K = {:.6g}", bracket, K));
    }
    return std::pow(bracket / (gas.enthalpy_factor() * K), 1.0 / (gas.gamma - 1.0));
}

double mach(const GasModel& gas, const FlowState& s) {
    return std::sqrt(s.speed_sq() / sound_speed_sq(gas, s));
}

FlowRegime classify(double m, double tol) {
    if (std::abs(m - 1.0) < tol) return FlowRegime::sonic;
    return m > 1.0 ? FlowRegime::supersonic : FlowRegime::subsonic;
}

}  // namespace transonic

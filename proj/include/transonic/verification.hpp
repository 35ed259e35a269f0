#pragma once

#include <array>
#include <map>
#include <string>

#include "transonic/fixed_point.hpp"

namespace transonic {

// Residuals of the five conservation equations and of the decomposed system
// (Bernoulli and entropy transport, two vorticity relations, deformation
// equation), evaluated with the shock-fitted derivatives. Background parts are
// cancelled analytically. Max norms, normalized by background scales.
struct EquationResiduals {
    std::array<double, 5> euler{};
    std::map<std::string, double> decomposed;
    double euler_max() const;
    double decomposed_max() const;
};

EquationResiduals equation_residuals(const Problem& p, const PerturbationField& f);

// Raw jump conditions at the fitted shock: mass by rho+ U+, momenta by P+,
// Bernoulli by B (background values at r_s).
std::array<double, 5> shock_residuals(const Problem& p, const PerturbationField& f);

struct ShockGradientResiduals {
    double F2 = 0.0, F3 = 0.0;              // tangential relations with the recomputed shock displacement
    double table2 = 0.0, table3 = 0.0;      // difference between gradient tables and differentiated values
    double div = 0.0, curl = 0.0, wall = 0.0;  // the first-order system satisfied by (F2, F3)
};

ShockGradientResiduals shock_gradient_residuals(const Problem& p, const PerturbationField& f,
                                                const FaceKernels& k);

// Wall checks: value, first or second normal derivative (one-sided) at both
// walls of an axis, with ten times the truncation estimate of that probe as tolerance.
enum class WallProbe { value, slope, curvature };
CompatibilityItem wall_check(const Field3& f, int axis, double h, WallProbe probe);
CompatibilityItem wall_check(const Field2& f, int axis, double h, WallProbe probe);  // axis 0 angular

std::map<std::string, CompatibilityItem> compatibility_suite(const Problem& p, const PerturbationField& f,
                                                             const StepResult& last);

// Trapezoid error bound for the cross-section integral of q.
double quadrature_tolerance(const Box& box, const Field2& q);

VerificationReport verify_solution(const Problem& p, const PerturbationField& f, const StepResult& last,
                                   double fixed_point_residual);

}  // namespace transonic

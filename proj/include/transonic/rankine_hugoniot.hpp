#pragma once

#include <array>

#include "transonic/background.hpp"
#include "transonic/geometry.hpp"
#include "transonic/grid.hpp"
#include "transonic/inflow.hpp"

namespace transonic {

// The five jump conditions across r = xi(theta, x3), in the order
// mass, radial momentum, angular momentum, axial momentum, Bernoulli.
using RHResidual = std::array<double, 5>;

// grad_theta = d(xi)/d(theta), grad_z = d(xi)/dx3.
RHResidual rh_residual(const GasModel& gas, const FlowState& minus, const FlowState& plus, double grad_theta,
                       double grad_z, double xi);

// Inputs at one cross-section node of the shock face.
struct ShockFacePoint {
    FlowState minus;           // supersonic state at (r_s + V6, y')
    std::array<double, 5> V{};  // V1..V5 at (r_s, y')
    double v6 = 0.0;
};

struct JumpPoint {
    double density = 0.0;   // transformed density from the Bernoulli relation
    double pressure = 0.0;
    double J = 0.0, J2 = 0.0, J3 = 0.0;
    double g2 = 0.0, g3 = 0.0;
    double R01 = 0.0, R02 = 0.0, R03 = 0.0;
    double R1 = 0.0, R2 = 0.0;
};

// Pointwise jump algebra around the background shock.
class JumpAlgebra {
public:
    explicit JumpAlgebra(const BackgroundCoefficients& coeffs);

    const BackgroundCoefficients& coefficients() const { return c_; }

    // Density and pressure recovered from (V, V6) at physical radius r.
    std::array<double, 2> density_pressure(const std::array<double, 5>& V, double r) const;
    // Downstream state built from V at the fitted shock.
    FlowState plus_state(const std::array<double, 5>& V, double v6) const;

    JumpPoint eval(const ShockFacePoint& p) const;

    // b-rows obtained by numerically inverting the linearized jump system.
    std::array<std::array<double, 3>, 2> numeric_rows() const;

    // Quadratic remainder of the exit pressure condition for V at r2.
    double exit_remainder(const std::array<double, 5>& V) const;

private:
    BackgroundCoefficients c_;
    double gamma_, rs_, B_, Kp_;
    RadialProfile plus_rs_;
    double jumpP_;
};

// Jump kernels on the cross-section grid.
struct FaceKernels {
    Field2 density, pressure;
    Field2 J, J2, J3, g2, g3;
    Field2 R01, R02, R03, R1, R2;
    Field2 q1;        // shock-face Poisson data
    Field2 q2, q3;    // wall data; meaningful on the matching walls
    Field2 bernoulli; // B- - B at the fitted shock
};

FaceKernels eval_face(const JumpAlgebra& alg, const Box& box, const std::array<Field2, 5>& V_at_shock,
                      const Field2& v6, const SupersonicField& minus);

// Vorticity data on the shock face from the kernels and the transform correction g4.
Field2 vorticity_boundary(const JumpAlgebra& alg, const Box& box, const FaceKernels& k, const Field2& g4);

// q5 = q1 + a0 a1 ((1/r_s) d2 W2 + d3 W3) at the shock face.
Field2 shock_poisson_data(const JumpAlgebra& alg, const Box& box, const FaceKernels& k, const Field2& W2_rs,
                          const Field2& W3_rs);

// Exit data: -A(r2) R4 + V5/U - eps Pex/(rho U) - |V|^2/(2U) - E(V)/U at r2.
Field2 exit_data(const JumpAlgebra& alg, const std::array<Field2, 5>& V_hat_r2, const Field2& V5_r2,
                 const Field2& R4_r2, const Field2& pex, double eps);

// V6 = (V1(r_s) - R1)/a1.
Field2 update_shock(const JumpAlgebra& alg, const Field2& V1_rs, const Field2& R1);

// Gradient tables from the tangential shock relations:
// d2 V6 = r_s (a0 V2 + g2), d3 V6 = a0 V3 + g3.
ShockSurface refine_shock(const JumpAlgebra& alg, const Box& box, Field2 v6, const Field2& V2_rs,
                          const Field2& V3_rs, const FaceKernels& k);

}  // namespace transonic

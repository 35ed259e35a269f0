#pragma once

#include "transonic/background.hpp"
#include "transonic/geometry.hpp"
#include "transonic/inflow.hpp"
#include "transonic/state.hpp"

namespace transonic {

// Coefficients of the transport operator for the lagged iterate. The operator
// D1 + (V2/U) D2 + (V3/U) D3, U = U(D0) + V1, is normalized so the y1
// coefficient is 1; the slopes, damping and source are divided by that
// coefficient.
struct TransportCoefficients {
    Field3 K2, K3;       // dy2/dy1 and dy3/dy1 along trajectories
    Field3 mu, H0;       // damping and source of the first vorticity component
    Field3 coef1;        // y1 coefficient of the transport operator
    Field3 damping, source;  // mu/coef1 and H0/coef1
};

TransportCoefficients transport_coefficients(const TransformOps& ops, const BackgroundAtNodes& bgn,
                                             const BackgroundSolution& bg, const PerturbationField& hat);

// Backward traces from every node to the shock face y1 = r_s.
struct CharacteristicField {
    Field3 K2, K3;
    Field3 foot2, foot3;         // footpoints on the shock face
    Field3 damping_integral;     // integral of the damping from the footpoint to the node
    Field3 source_integral;      // Duhamel integral of the source
    double max_excursion = 0.0;  // largest clamped excursion outside the cross-section
};

// RK4 with step h_r/2. damping and source may be null (treated as zero).
CharacteristicField trace_characteristics(const Box& box, const Field3& K2, const Field3& K3,
                                          const Field3* damping = nullptr, const Field3* source = nullptr);

CharacteristicField build_characteristics(const Box& box, const TransportCoefficients& tc);

// V5(y) = B-(r_s + V6(beta), beta) - B-background.
Field3 transport_bernoulli(const CharacteristicField& ch, const Box& box, const SupersonicField& minus,
                           const BackgroundSolution& bg, const ShockSurface& hat_shock);

// R4(y) = a2 (V6(beta) - V6(y')) + R2(beta) - (a2/a1) R1(y').
Field3 entropy_remainder(const CharacteristicField& ch, const Box& box, const BackgroundCoefficients& c,
                         const ShockSurface& hat_shock, const Field2& R1, const Field2& R2);

// V4(y) = (a2/a1) V1(r_s, y') + R4(y).
Field3 transport_entropy(const Box& box, const BackgroundCoefficients& c, const Field2& V1_rs, const Field3& R4);

// omega(y) = R6(beta) exp(-int damping) + int source exp(-int damping).
Field3 transport_vorticity(const CharacteristicField& ch, const Box& box, const Field2& R6);

}  // namespace transonic

#pragma once

#include <array>

#include "transonic/background.hpp"
#include "transonic/geometry.hpp"
#include "transonic/state.hpp"

namespace transonic {

// Box partials and shock-fitted derivatives of V1..V5.
struct IterateDerivatives {
    std::array<Field3, 5> p1, p2, p3;  // d/dy1, d/dy2, d/dy3 on the box
    std::array<Gradient, 5> D;         // physical derivatives D1, D2, D3

    static IterateDerivatives make(const TransformOps& ops, const PerturbationField& f);
};

// Background quantities at the physical radius of each node and at y1.
struct RadialTables {
    BackgroundAtNodes at_radius;  // evaluated at D0
    Field3 ellipticity_r, first_order_r, bernoulli_source_r, entropy_weight_r;  // at D0
    std::vector<double> ellipticity_y, first_order_y, bernoulli_source_y, entropy_weight_y, mach_sq_y;  // at y1

    static RadialTables make(const BackgroundCoefficients& c, const TransformOps& ops);
};

// Differences between the box-coordinate and shock-fitted forms of the
// three vorticity relations, H1..H3, and of the deformation equation.
struct TransformDefects {
    Field3 H1, H2, H3;
    Field3 div_defect;  // fitted form minus box form of the deformation operator
};

TransformDefects transform_defects(const Box& box, const BackgroundSolution& bg, const RadialTables& t,
                                   const TransformOps& ops, const PerturbationField& f,
                                   const IterateDerivatives& d);

// Quadratic part of the deformation equation in shock-fitted form.
Field3 deformation_nonlinearity(const Box& box, const BackgroundSolution& bg, const RadialTables& t,
                                const TransformOps& ops, const PerturbationField& f, const IterateDerivatives& d);

// The right-hand sides of the deformation-curl system.
struct CurlSources {
    Field3 G0, G1, G2, G3;
};

// omega is the transported first vorticity component, V5 the transported
// Bernoulli perturbation, R4 the entropy remainder.
CurlSources curl_sources(const Box& box, const RadialTables& t, const TransformOps& ops,
                         const PerturbationField& hat, const TransformDefects& def, const Field3& nonlinearity,
                         const Field3& omega, const Field3& V5, const Field3& R4);

}  // namespace transonic

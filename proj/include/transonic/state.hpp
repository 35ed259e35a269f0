#pragma once

#include <array>

#include "transonic/geometry.hpp"
#include "transonic/grid.hpp"

namespace transonic {

// Unknowns of the shock-fitted problem: V1..V5 on the box (radial, angular,
// axial velocity, entropy and Bernoulli perturbations) and the shock offset.
struct PerturbationField {
    std::array<Field3, 5> V;
    ShockSurface shock;

    static PerturbationField zero(const Box& box) {
        PerturbationField p;
        for (auto& f : p.V) f = Field3(box);
        p.shock = ShockSurface::zero(box);
        return p;
    }
};

enum Var { kRadial = 0, kAngular = 1, kAxial = 2, kEntropy = 3, kBernoulli = 4 };

}  // namespace transonic

#pragma once

#include <array>
#include <string>

#include "transonic/background.hpp"
#include "transonic/grid.hpp"

namespace transonic {

// Shock displacement V6 = xi - r_s on the cross-section, with its gradient
// tables. Values and gradients are replaced together.
struct ShockSurface {
    Field2 value;
    Field2 grad2;  // d/dy2
    Field2 grad3;  // d/dy3

    static ShockSurface zero(const Box& box);
    // gradients by finite differences of the values
    static ShockSurface from_values(const Box& box, Field2 values);

    double at(const Box& box, double y2, double y3) const { return interpolate(value, box.angular, box.axial, y2, y3); }
};

// Physical radius of the fixed-box point (y1, .) for a local shock offset v6.
double to_physical(const Box& box, double y1, double v6);
// Inverse map; OutOfDomain if r lies outside [r_s + v6, r2] beyond rounding.
double to_fixed(const Box& box, double r, double v6);

using Point3 = std::array<double, 3>;
Point3 to_physical(const Box& box, const ShockSurface& shock, const Point3& y);
Point3 to_fixed(const Box& box, const ShockSurface& shock, const Point3& x);

// Physical derivatives (d/dr, (1/r) d/dtheta, d/dx3) of a field on the box.
struct Gradient {
    Field3 d1, d2, d3;
};

// The shock-fitted derivative operators. D0 is the physical radius; D1..D3
// are the physical derivatives expressed in box coordinates.
class TransformOps {
public:
    TransformOps(const Box& box, const ShockSurface& shock);

    const Box& box() const { return box_; }
    const ShockSurface& shock() const { return shock_; }
    const Field3& radius() const { return radius_; }

    // (r2 - r_s)/(r2 - r_s - V6) at cross-section node (j, k)
    double stretch(int j, int k) const { return stretch_(j, k); }
    // (y1 - r2)/(r2 - r_s - V6) at node (i, j, k)
    double shear(int i, int j, int k) const;

    // op 0 returns the physical radius; ops 1..3 differentiate f.
    Field3 apply(int op, const Field3& f) const;
    Gradient gradient(const Field3& f) const;
    // Same, with cross-section derivatives reflected at the walls by parity.
    Gradient gradient(const Field3& f, Parity angular, Parity axial) const;
    // Same, from precomputed box partials.
    Gradient combine(const Field3& p1, const Field3& p2, const Field3& p3) const;

private:
    Box box_;
    ShockSurface shock_;
    Field3 radius_;
    Field2 stretch_;
};

// Downstream background evaluated at the physical radius of every node.
struct BackgroundAtNodes {
    Field3 speed, speed_slope, density, sound_sq, pressure;

    static BackgroundAtNodes make(const BackgroundSolution& bg, const Field3& radius);
};

void write_shock_csv(const Box& box, const ShockSurface& shock, const std::string& path);

}  // namespace transonic

#include "transonic/geometry.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "transonic/errors.hpp"
#include "transonic/parallel.hpp"

namespace transonic {

ShockSurface ShockSurface::zero(const Box& box) {
    return ShockSurface{Field2(box), Field2(box), Field2(box)};
}

ShockSurface ShockSurface::from_values(const Box& box, Field2 values) {
    ShockSurface s;
    s.grad2 = diff4(values, 0, box.angular.step(), Parity::cosine);
    s.grad3 = diff4(values, 1, box.axial.step(), Parity::cosine);
    s.value = std::move(values);
    return s;
}

double to_physical(const Box& box, double y1, double v6) {
    const double rs = box.radial.lo, r2 = box.radial.hi;
    return y1 + (r2 - y1) * v6 / (r2 - rs);
}

double to_fixed(const Box& box, double r, double v6) {
    const double rs = box.radial.lo, r2 = box.radial.hi;
    const double lo = rs + v6;
    const double tol = 1e-12 * r2;
    if (r < lo - tol || r > r2 + tol) {
        throw OutOfDomain(fmt::format("radius {} outside the subsonic region [{}, {}]", r, lo, r2));
    }
    return (r - rs - v6) / (r2 - rs - v6) * (r2 - rs) + rs;
}

Point3 to_physical(const Box& box, const ShockSurface& shock, const Point3& y) {
    const double v6 = shock.at(box, y[1], y[2]);
    return {to_physical(box, y[0], v6), y[1], y[2]};
}

Point3 to_fixed(const Box& box, const ShockSurface& shock, const Point3& x) {
    const double v6 = shock.at(box, x[1], x[2]);
    return {to_fixed(box, x[0], v6), x[1], x[2]};
}

TransformOps::TransformOps(const Box& box, const ShockSurface& shock)
    : box_(box), shock_(shock), radius_(box), stretch_(box) {
    const double rs = box.radial.lo, r2 = box.radial.hi;
    for (int j = 0; j < box.nt(); ++j)
        for (int k = 0; k < box.nz(); ++k) stretch_(j, k) = (r2 - rs) / (r2 - rs - shock.value(j, k));
    for (int i = 0; i < box.nr(); ++i) {
        const double y1 = box.radial.x(i);
        for (int j = 0; j < box.nt(); ++j)
            for (int k = 0; k < box.nz(); ++k) radius_(i, j, k) = to_physical(box, y1, shock.value(j, k));
    }
}

double TransformOps::shear(int i, int j, int k) const {
    const double rs = box_.radial.lo, r2 = box_.radial.hi;
    return (box_.radial.x(i) - r2) / (r2 - rs - shock_.value(j, k));
}

Gradient TransformOps::combine(const Field3& p1, const Field3& p2, const Field3& p3) const {
    Gradient g{Field3(box_), Field3(box_), Field3(box_)};
    for (int i = 0; i < box_.nr(); ++i)
        for (int j = 0; j < box_.nt(); ++j)
            for (int k = 0; k < box_.nz(); ++k) {
                const std::size_t n = p1.index(i, j, k);
                const double c = shear(i, j, k);
                g.d1[n] = stretch_(j, k) * p1[n];
                g.d2[n] = (p2[n] + c * shock_.grad2(j, k) * p1[n]) / radius_[n];
                g.d3[n] = p3[n] + c * shock_.grad3(j, k) * p1[n];
            }
    return g;
}

Gradient TransformOps::gradient(const Field3& f) const {
    return combine(diff4(f, 0, box_.radial.step()), diff4(f, 1, box_.angular.step()), diff4(f, 2, box_.axial.step()));
}

Gradient TransformOps::gradient(const Field3& f, Parity angular, Parity axial) const {
    return combine(diff4(f, 0, box_.radial.step()), diff4(f, 1, box_.angular.step(), angular),
                   diff4(f, 2, box_.axial.step(), axial));
}

Field3 TransformOps::apply(int op, const Field3& f) const {
    switch (op) {
        case 0:
            return radius_;
        case 1:
            return gradient(f).d1;
        case 2:
            return gradient(f).d2;
        case 3:
            return gradient(f).d3;
        default:
            throw std::invalid_argument("operator index must be 0..3");
    }
}

BackgroundAtNodes BackgroundAtNodes::make(const BackgroundSolution& bg, const Field3& radius) {
    BackgroundAtNodes t;
    const int nr = radius.nr(), nt = radius.nt(), nz = radius.nz();
    for (Field3* f : {&t.speed, &t.speed_slope, &t.density, &t.sound_sq, &t.pressure}) *f = Field3(nr, nt, nz);
    parallel_for(nr, [&](int i) {
        for (int j = 0; j < nt; ++j)
            for (int k = 0; k < nz; ++k) {
                const std::size_t n = radius.index(i, j, k);
                const RadialProfile p = bg.downstream(radius[n]);
                t.speed[n] = p.speed;
                t.speed_slope[n] = p.speed_slope;
                t.density[n] = p.density;
                t.sound_sq[n] = p.sound_sq;
                t.pressure[n] = p.pressure;
            }
    });
    return t;
}

void write_shock_csv(const Box& box, const ShockSurface& shock, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << "theta_rad,x3,xi\n";
    const double rs = box.radial.lo;
    for (int j = 0; j < box.nt(); ++j)
        for (int k = 0; k < box.nz(); ++k)
            out << fmt::format("{:.17g},{:.17g},{:.17g}\n", box.angular.x(j), box.axial.x(k), rs + shock.value(j, k));
}

}  // namespace transonic

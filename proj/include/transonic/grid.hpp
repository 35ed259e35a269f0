#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace transonic {

// Symmetry of a field about the walls of a cross-section axis: cosine modes
// are even about both walls, sine modes odd.
enum class Parity { cosine, sine };

// Uniform axis with nodes at both ends.
struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    int intervals = 1;

    int nodes() const { return intervals + 1; }
    double step() const { return (hi - lo) / intervals; }
    double length() const { return hi - lo; }
    double x(int i) const { return i == intervals ? hi : lo + i * step(); }
    std::vector<double> coordinates() const;
};

// Fixed computational box: radial y1 in [r_s, r2], angular y2 in [-theta0, theta0],
// axial y3 in [-z_half, z_half].
struct Box {
    Axis radial;
    Axis angular;
    Axis axial;

    static Box make(double r_s, double r2, double theta0, double z_half, int n_r, int n_t, int n_z);

    int nr() const { return radial.nodes(); }
    int nt() const { return angular.nodes(); }
    int nz() const { return axial.nodes(); }
    std::size_t size() const { return std::size_t(nr()) * nt() * nz(); }
    std::size_t section_size() const { return std::size_t(nt()) * nz(); }
    const Axis& axis(int a) const { return a == 0 ? radial : (a == 1 ? angular : axial); }
};

// Scalar field on the cross-section grid, row-major in (angular, axial).
class Field2 {
public:
    Field2() = default;
    Field2(int nt, int nz, double value = 0.0) : nt_(nt), nz_(nz), v_(std::size_t(nt) * nz, value) {}
    explicit Field2(const Box& b, double value = 0.0) : Field2(b.nt(), b.nz(), value) {}

    int nt() const { return nt_; }
    int nz() const { return nz_; }
    std::size_t size() const { return v_.size(); }
    double& operator()(int j, int k) { return v_[std::size_t(j) * nz_ + k]; }
    double operator()(int j, int k) const { return v_[std::size_t(j) * nz_ + k]; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

private:
    int nt_ = 0, nz_ = 0;
    std::vector<double> v_;
};

// Scalar field on the 3D box, row-major in (radial, angular, axial).
class Field3 {
public:
    Field3() = default;
    Field3(int nr, int nt, int nz, double value = 0.0)
        : nr_(nr), nt_(nt), nz_(nz), v_(std::size_t(nr) * nt * nz, value) {}
    explicit Field3(const Box& b, double value = 0.0) : Field3(b.nr(), b.nt(), b.nz(), value) {}

    int nr() const { return nr_; }
    int nt() const { return nt_; }
    int nz() const { return nz_; }
    int dim(int a) const { return a == 0 ? nr_ : (a == 1 ? nt_ : nz_); }
    std::size_t size() const { return v_.size(); }
    std::size_t index(int i, int j, int k) const { return (std::size_t(i) * nt_ + j) * nz_ + k; }
    double& operator()(int i, int j, int k) { return v_[index(i, j, k)]; }
    double operator()(int i, int j, int k) const { return v_[index(i, j, k)]; }
    double& operator[](std::size_t n) { return v_[n]; }
    double operator[](std::size_t n) const { return v_[n]; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    Field2 slice(int i) const;
    void set_slice(int i, const Field2& s);

private:
    int nr_ = 0, nt_ = 0, nz_ = 0;
    std::vector<double> v_;
};

// Finite differences: second-order centered in the interior, one-sided
// four-point closures at the ends (third order for the first derivative).
void diff_line(const double* in, double* out, int n, std::ptrdiff_t stride, double h);
void diff2_line(const double* in, double* out, int n, std::ptrdiff_t stride, double h);

std::vector<double> diff(const std::vector<double>& f, double h);
std::vector<double> diff2(const std::vector<double>& f, double h);
Field3 diff(const Field3& f, int axis, double h);
Field3 diff2(const Field3& f, int axis, double h);
// Fourth-order first derivative, five-point one-sided near the ends; needs 5 nodes.
void diff4_line(const double* in, double* out, int n, std::ptrdiff_t stride, double h);
Field3 diff4(const Field3& f, int axis, double h);
Field2 diff4(const Field2& f, int axis, double h);
// Fourth-order first and second derivatives of a line; six-point one-sided
// stencils near the ends (at least six nodes).
std::vector<double> diff4(const std::vector<double>& f, double h);
std::vector<double> diff4_second(const std::vector<double>& f, double h);
// Fourth-order centered first derivative across a wall-bounded axis, with the
// ghost values reflected according to the parity (axis 0 of a Field3 is radial
// and falls back to the one-sided closure).
Field3 diff4(const Field3& f, int axis, double h, Parity p);
Field2 diff4(const Field2& f, int axis, double h, Parity p);
Field2 diff(const Field2& f, int axis, double h);  // axis 0 = angular, 1 = axial
Field2 diff2(const Field2& f, int axis, double h);

// Four-point Lagrange stencil on a uniform axis; clamps near the ends.
struct CubicStencil {
    int first;
    std::array<double, 4> w;
};
CubicStencil cubic_stencil(const Axis& a, double x);

double interpolate(const std::vector<double>& f, const Axis& a, double x);
double interpolate(const Field2& f, const Axis& a2, const Axis& a3, double y2, double y3);
double interpolate(const Field3& f, const Box& b, double y1, double y2, double y3);

// Composite trapezoid weights on an axis.
std::vector<double> trapezoid_weights(const Axis& a);
double integrate(const Field2& f, const Axis& a2, const Axis& a3);

double max_abs(const std::vector<double>& v);
inline double max_abs(const Field2& f) { return max_abs(f.values()); }
inline double max_abs(const Field3& f) { return max_abs(f.values()); }

}  // namespace transonic

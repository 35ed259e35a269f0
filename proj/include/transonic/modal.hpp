#pragma once

#include <Eigen/Dense>

#include "transonic/grid.hpp"

namespace transonic {

// Truncated cosine or sine family on a wall-bounded axis, cos(k pi s / L) or
// sin(k pi s / L) with s measured from the lower wall. Both families use
// k = 0..modes-1; the k = 0 sine function is identically zero and its
// coefficient is always zero.
class Basis1D {
public:
    Basis1D() = default;
    Basis1D(const Axis& a, Parity p, int modes);

    int modes() const { return modes_; }
    Parity parity() const { return parity_; }
    double wavenumber(int k) const { return k * kPi / length_; }
    double value(int k, int node) const { return synthesis_(node, k); }

    // coefficients from nodal values (weighted projection), and back
    Eigen::MatrixXd analysis() const { return analysis_; }
    const Eigen::MatrixXd& synthesis() const { return synthesis_; }
    const Eigen::MatrixXd& analysis_ref() const { return analysis_; }

    static constexpr double kPi = 3.14159265358979323846;

private:
    Parity parity_ = Parity::cosine;
    int modes_ = 0;
    double length_ = 1.0;
    Eigen::MatrixXd analysis_;   // modes x nodes
    Eigen::MatrixXd synthesis_;  // nodes x modes
};

using ModalCoefficients = Eigen::MatrixXd;  // (angular mode, axial mode)

class ModalBasis {
public:
    ModalBasis() = default;
    ModalBasis(const Box& box, int angular_modes, int axial_modes);

    int angular_modes() const { return m2_; }
    int axial_modes() const { return m3_; }
    double angular_wavenumber(int k) const { return cos2_.wavenumber(k); }
    double axial_wavenumber(int l) const { return cos3_.wavenumber(l); }

    const Basis1D& angular(Parity p) const { return p == Parity::cosine ? cos2_ : sin2_; }
    const Basis1D& axial(Parity p) const { return p == Parity::cosine ? cos3_ : sin3_; }

    ModalCoefficients transform(const Field2& f, Parity p2, Parity p3) const;
    Field2 inverse(const ModalCoefficients& c, Parity p2, Parity p3) const;

private:
    int m2_ = 0, m3_ = 0;
    Basis1D cos2_, sin2_, cos3_, sin3_;
};

}  // namespace transonic

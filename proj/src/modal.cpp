#include "transonic/modal.hpp"

#include <cmath>
#include <stdexcept>

namespace transonic {

Basis1D::Basis1D(const Axis& a, Parity p, int modes) : parity_(p), modes_(modes), length_(a.length()) {
    const int n = a.nodes();
    if (modes < 1 || modes > n) throw std::invalid_argument("mode count exceeds the number of nodes");
    const auto w = trapezoid_weights(a);
    synthesis_.resize(n, modes);
    analysis_.resize(modes, n);
    for (int k = 0; k < modes; ++k) {
        double norm = 0.0;
        for (int j = 0; j < n; ++j) {
            // exact angles at the nodes avoid drift from the coordinate arithmetic
            const double angle = kPi * double(k) * double(j) / double(a.intervals);
            const double v = p == Parity::cosine ? std::cos(angle) : std::sin(angle);
            synthesis_(j, k) = v;
            norm += w[j] * v * v;
        }
        for (int j = 0; j < n; ++j) {
            analysis_(k, j) = norm > 0.0 ? w[j] * synthesis_(j, k) / norm : 0.0;
        }
    }
    if (p == Parity::sine) {
        // wall values of sine functions are zero up to rounding; make them exact
        synthesis_.row(0).setZero();
        synthesis_.row(n - 1).setZero();
    }
}

ModalBasis::ModalBasis(const Box& box, int angular_modes, int axial_modes)
    : m2_(angular_modes),
      m3_(axial_modes),
      cos2_(box.angular, Parity::cosine, angular_modes),
      sin2_(box.angular, Parity::sine, angular_modes),
      cos3_(box.axial, Parity::cosine, axial_modes),
      sin3_(box.axial, Parity::sine, axial_modes) {}

namespace {
using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
}

ModalCoefficients ModalBasis::transform(const Field2& f, Parity p2, Parity p3) const {
    Eigen::Map<const RowMajor> F(f.data(), f.nt(), f.nz());
    return angular(p2).analysis_ref() * F * axial(p3).analysis_ref().transpose();
}

Field2 ModalBasis::inverse(const ModalCoefficients& c, Parity p2, Parity p3) const {
    const auto& S2 = angular(p2).synthesis();
    const auto& S3 = axial(p3).synthesis();
    Field2 out(int(S2.rows()), int(S3.rows()));
    Eigen::Map<RowMajor> F(out.data(), out.nt(), out.nz());
    F = S2 * c * S3.transpose();
    return out;
}

}  // namespace transonic

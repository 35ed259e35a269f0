#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <Eigen/Sparse>

#include "transonic/background.hpp"
#include "transonic/grid.hpp"
#include "transonic/modal.hpp"

namespace transonic {

// Cross-section modal coefficients at every radial node.
using RadialModes = std::vector<ModalCoefficients>;

RadialModes to_modes(const ModalBasis& basis, const Field3& f, Parity p2, Parity p3);
Field3 from_modes(const ModalBasis& basis, const RadialModes& m, Parity p2, Parity p3);
RadialModes zero_modes(const ModalBasis& basis, int nr);

struct PiSolution {
    Field3 pi;
    RadialModes modes;                    // sine-sine coefficients of Pi
    RadialModes reduced1, reduced2, reduced3;  // G - grad Pi, in the curl parities
    double equation_residual = 0.0;       // fourth-order Poisson defect, max over modes
    double compatibility = 0.0;           // wall-parity defect of the sources
};

struct DivCurlSolution {
    RadialModes a, b, d;  // coefficients of the three components
    Field3 v1, v2, v3;
    double div_residual = 0.0;
    double curl_residual = 0.0;
    double source_divergence = 0.0;  // divergence of the reduced sources
    double truncation = 0.0;         // radial truncation estimate for that divergence
};

struct ShockPoisson {
    Field2 m1;
    ModalCoefficients modes;
    double q5_integral = 0.0;  // removed mean, times the area
    double m1_integral = 0.0;
};

struct PotentialSolution {
    RadialModes X, dX;  // modal potential and its radial derivative
    Field3 phi;
    double robin_residual = 0.0;    // max over modes of X'(r_s) - a4 X(r_s) - m1
    double neumann_residual = 0.0;  // max over modes of X'(r2) - m2
    double min_closure = 0.0;       // smallest |1 - Z(r_s)| of the superposition closure
};

struct VelocityField {
    Field3 v1, v2, v3;
};

// Radial discretization: second-order finite differences on the box nodes, lifted
// to fourth order by deferred correction where the line has six or more nodes;
// cross-section: truncated cosine/sine families.
class EllipticSolver {
public:
    EllipticSolver(const Box& box, const ModalBasis& basis, const BackgroundCoefficients& coeffs);

    const Box& box() const { return box_; }
    const ModalBasis& basis() const { return basis_; }

    // Dirichlet Poisson problem for Pi with div G on the right.
    PiSolution solve_pi(const Field3& G1, const Field3& G2, const Field3& G3) const;

    // curl W = reduced sources, div W = 0, normal components zero; least squares per mode.
    // Throws SolvabilityViolation when the reduced sources carry a divergence above
    // tolerance_factor times the radial truncation estimate.
    DivCurlSolution solve_div_curl(const PiSolution& pi, double tolerance_factor = 10.0) const;

    ShockPoisson solve_m1(const Field2& q5) const;

    // d1 X'' + (1/y + d2) X' - (k^2/y^2 + l^2) X - a0 a1 d4 X(r_s) = G5,
    // X'(r_s) - a4 X(r_s) = m1, X'(r2) = m2.
    PotentialSolution solve_potential(const Field3& G5, const ModalCoefficients& m1, const Field2& m2) const;
    PotentialSolution solve_potential_modes(const RadialModes& G5, const ModalCoefficients& m1,
                                            const ModalCoefficients& m2) const;

    VelocityField assemble_velocity(const PotentialSolution& phi, const DivCurlSolution& w) const;

    // Radial coefficient tables at the nodes.
    const std::vector<double>& ellipticity() const { return d1_; }
    const std::vector<double>& drift() const { return first_; }  // 1/y + d2
    const std::vector<double>& nonlocal() const { return d4_; }
    const std::vector<double>& coupling() const { return d3_; }

private:
    struct Factor;
    const Factor& div_curl_factor(int k, int l) const;

    Box box_;
    ModalBasis basis_;
    double a0_, a1_, a3_, a4_;
    std::vector<double> y_, d1_, first_, d3_, d4_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<Factor>> cache_;
};

// Tridiagonal solve; returns false on a vanishing pivot.
bool solve_tridiagonal(const std::vector<double>& lower, const std::vector<double>& diag,
                       const std::vector<double>& upper, std::vector<double>& rhs);

}  // namespace transonic

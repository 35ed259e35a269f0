#pragma once

#include <map>
#include <string>
#include <vector>

#include "transonic/background.hpp"
#include "transonic/elliptic.hpp"
#include "transonic/inflow.hpp"
#include "transonic/rankine_hugoniot.hpp"
#include "transonic/sources.hpp"
#include "transonic/state.hpp"
#include "transonic/transport.hpp"

namespace transonic {

// Inputs of the iteration that stay fixed: grid, background, supersonic
// field ahead of the shock and exit data.
struct Problem {
    Problem(const Box& box, int angular_modes, int axial_modes, const InflowBackground& inflow, double shock_radius,
            SupersonicField minus, Field2 exit_perturbation, double eps, double data_norm = 1.0);

    Box box;
    ModalBasis basis;
    InflowBackground inflow;
    BackgroundSolution background;
    BackgroundCoefficients coeffs;
    JumpAlgebra jump;
    SupersonicField minus;
    EllipticSolver elliptic;
    Field2 exit_perturbation;  // P_ex on the cross-section
    double eps;
    // X-surrogate of the unit boundary data; eps times this bounds the data
    double data_norm;
};

// Everything one application of the operator produces.
struct StepResult {
    PerturbationField next;
    FaceKernels kernels;
    Field3 omega, R4;
    CurlSources sources;
    PiSolution pi;
    DivCurlSolution div_curl;
    Field2 q5, q4;
    ShockPoisson shock_poisson;
    PotentialSolution potential;
    double characteristic_excursion = 0.0;
};

// One application of the operator. Errors from any stage carry the stage name.
StepResult apply_T(const Problem& p, const PerturbationField& hat);

// Scales that make the norm surrogates dimensionless.
struct NormScales {
    double velocity = 1.0, entropy = 1.0, bernoulli = 1.0, length = 1.0;
    static NormScales of(const Problem& p);
};

// Sup of values and first derivatives (shock: up to second derivatives).
double w_norm(const Box& box, const PerturbationField& f, const NormScales& s);
// Sup of values and derivatives up to second order (shock: third).
double x_norm(const Box& box, const PerturbationField& f, const NormScales& s);

PerturbationField difference(const PerturbationField& a, const PerturbationField& b);
// a + t (b - a), shock gradients included
PerturbationField blend(const PerturbationField& a, const PerturbationField& b, double t);

struct IterationOptions {
    int max_iters = 30;
    double tolerance = 1e-10;   // on the w-surrogate of successive differences
    double relaxation = 1.0;
    bool enforce_trust_radius = true;
};

struct IterationRecord {
    int iteration = 0;
    double update_w = 0.0;   // w-surrogate of the difference to the previous iterate
    double ratio = 0.0;      // update_w over the previous update_w
    double x_norm = 0.0;
    double w_norm = 0.0;
    double pi_max = 0.0;
    double q5_integral = 0.0;
    double source_divergence = 0.0;
    double seconds = 0.0;
};

struct CompatibilityItem {
    double value = 0.0;
    double tolerance = 0.0;
    bool pass() const { return value <= tolerance; }
};

struct VerificationReport {
    bool evaluated = false;
    std::array<double, 5> rh{};     // normalized raw jump residuals at the fitted shock
    double rh_max = 0.0;
    std::array<double, 5> euler{};  // normalized residuals of the five conservation equations
    double euler_max = 0.0;
    std::map<std::string, double> decomposed;  // transport, vorticity and deformation residuals
    double decomposed_max = 0.0;
    double shock_gradient_angular = 0.0;  // F2
    double shock_gradient_axial = 0.0;    // F3
    double pi_max = 0.0;
    double q5_integral = 0.0;
    double q5_quadrature_tolerance = 0.0;
    double m1_integral = 0.0;
    double fixed_point_residual = 0.0;
    std::map<std::string, CompatibilityItem> compatibility;
};

struct RunReport {
    std::vector<IterationRecord> history;
    bool converged = false;
    int iterations = 0;
    double trust_radius = 0.0;
    std::string failure_kind, failure_message, failure_stage;
    PerturbationField solution;
    StepResult last;  // application of the operator at the final iterate's predecessor
    VerificationReport verification;
};

// Picard iteration from the zero iterate. Solver errors end the run and are recorded.
RunReport iterate(const Problem& p, const IterationOptions& opt, bool verify = true);

// Name of the error class of a solver failure.
std::string error_kind(const std::exception& e);

}  // namespace transonic

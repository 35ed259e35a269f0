#pragma once

#include <array>
#include <string>
#include <vector>

#include "transonic/background.hpp"
#include "transonic/grid.hpp"
#include "transonic/modal.hpp"

namespace transonic {

enum class InflowVariable { radial_velocity = 0, angular_velocity, axial_velocity, pressure, entropy };

const char* variable_name(InflowVariable v);
InflowVariable variable_from_name(const std::string& name);

// One tensor mode cos/sin(k pi s/(2 theta0)) * cos/sin(l pi t/(2 z_half)),
// s and t measured from the lower walls.
struct CrossSectionMode {
    int angular_index = 0;
    int axial_index = 0;
    double amplitude = 0.0;
    Parity angular_parity = Parity::cosine;
    Parity axial_parity = Parity::cosine;
};

double evaluate_modes(const std::vector<CrossSectionMode>& modes, const NozzleGeometry& geo, double theta,
                      double z);

struct InflowMode {
    InflowVariable variable = InflowVariable::pressure;
    CrossSectionMode shape;
};

// Inlet data: background inlet state plus eps times five cross-sectional profiles.
struct InletPerturbation {
    double eps = 0.0;
    NozzleGeometry geometry;
    std::vector<InflowMode> modes;  // amplitudes normalized so the largest is 1

    double profile(InflowVariable v, double theta, double z) const;
};

// The parity each variable must carry so that the wall compatibility holds.
Parity required_angular_parity(InflowVariable v);
Parity required_axial_parity(InflowVariable v);

InletPerturbation make_inlet(double eps, const std::vector<InflowMode>& modes, const NozzleGeometry& geo);

struct MarchDiagnostics {
    double max_perturbation = 0.0;
    double min_mach = 0.0;
    int substeps = 0;
    // wall compatibility, max over stations: even quantities' normal derivative,
    // odd quantity's value and second normal derivative
    double angular_wall_slope = 0.0;
    double angular_wall_value = 0.0;
    double angular_wall_curvature = 0.0;
    double axial_wall_slope = 0.0;
    double axial_wall_value = 0.0;
    double axial_wall_curvature = 0.0;
    double euler_residual = 0.0;  // discrete conservation residual of the perturbation
};

// Supersonic field on [r1, r2] x cross-section; perturbations from the
// background are stored per station and interpolated (cubic in r, bicubic
// in the cross-section).
class SupersonicField {
public:
    SupersonicField() = default;
    SupersonicField(const InflowBackground& bg, const Axis& radial, const Axis& angular, const Axis& axial);

    const InflowBackground& background() const { return bg_; }
    const Axis& radial() const { return radial_; }
    const Axis& angular() const { return angular_; }
    const Axis& axial() const { return axial_; }

    // perturbation of (u_r, u_theta, u_z, density, K) at station i
    std::array<Field3, 5>& perturbation() { return delta_; }
    const std::array<Field3, 5>& perturbation() const { return delta_; }

    FlowState node(int i, int j, int k) const;
    FlowState eval(double r, double y2, double y3) const;

    MarchDiagnostics diagnostics;

private:
    InflowBackground bg_;
    Axis radial_, angular_, axial_;
    std::array<Field3, 5> delta_;
};

struct MarchOptions {
    int stations = 64;
    double cfl = 0.8;
    double mach_guard = 1.2;
};

SupersonicField march_supersonic(const InflowBackground& bg, const InletPerturbation& inlet, const Axis& angular,
                                 const Axis& axial, const MarchOptions& opt = {});

// Background plus the inlet profiles held constant in r (pressure and entropy
// converted to density); an analytic stand-in used to isolate tests.
SupersonicField frozen_supersonic(const InflowBackground& bg, const InletPerturbation& inlet, const Axis& angular,
                                  const Axis& axial, int stations = 64);

FlowState eval_minus(const SupersonicField& field, double r, double y2, double y3);

void write_field_csv(const SupersonicField& field, const std::string& path);

}  // namespace transonic

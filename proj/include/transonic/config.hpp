#pragma once

#include <string>
#include <vector>

#include "transonic/background.hpp"
#include "transonic/fixed_point.hpp"
#include "transonic/inflow.hpp"

namespace transonic {

enum class RunMode { background, inflow, full, sweep, verify };
const char* mode_name(RunMode m);
RunMode mode_from_name(const std::string& name);

struct GridConfig {
    int radial = 32, angular = 16, axial = 16;  // intervals
    int angular_modes = 12, axial_modes = 12;
    int stations = 64;                          // supersonic march stations on [r1, r2]
};

struct SolverConfig {
    double fixed_point_tolerance = 1e-10;
    double linear_tolerance = 1e-12;
    double rh_tolerance = 1e-6;
    int max_iters = 30;
    double relaxation = 1.0;
    bool enforce_trust_radius = true;
    bool frozen_inflow = false;  // hold the inlet profiles constant in r instead of marching
};

struct RunConfig {
    GasModel gas;
    NozzleGeometry geometry;
    InletState inlet;
    // Exit pressure; when not positive the background shock sits at shock_radius.
    double exit_pressure = 0.0;
    double shock_radius = 1.5;
    std::vector<CrossSectionMode> exit_modes;  // cosine-cosine
    double eps = 0.0;
    std::vector<InflowMode> inflow_modes;
    GridConfig grid;
    SolverConfig solver;
    std::vector<double> sweep_pressures;
    RunMode mode = RunMode::full;
    std::string output = "out";

    static RunConfig defaults();
    // Throws ConfigError naming the offending key.
    void validate() const;
    RunConfig scaled(int grid_scale) const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& c);

// Objects built from a configuration.
InflowBackground config_inflow(const RunConfig& c);
double config_shock_radius(const RunConfig& c, const InflowBackground& inflow);
Box config_box(const RunConfig& c, double shock_radius);
Field2 config_exit_perturbation(const RunConfig& c, const Box& box);
SupersonicField config_supersonic(const RunConfig& c, const InflowBackground& inflow, const Box& box);
// X-surrogate of the inlet and exit profiles at unit amplitude, relative to the
// background inlet and exit scales: sum over modes of |a| (1 + w + w^2), w the
// largest tangential wavenumber times r2 - r1.
double boundary_data_norm(const RunConfig& c, const InflowBackground& inflow);
Problem config_problem(const RunConfig& c);
IterationOptions config_iteration(const RunConfig& c);

}  // namespace transonic

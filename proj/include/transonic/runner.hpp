#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "transonic/config.hpp"
#include "transonic/fixed_point.hpp"

namespace transonic {

struct RunOptions {
    bool dump_kernels = false;
    std::ostream* log = nullptr;  // progress lines; null for silence
};

struct SweepRow {
    double exit_pressure = 0.0;
    std::optional<double> shock_radius;  // empty when the pressure is out of range
    std::string error;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    std::pair<double, double> admissible;  // (P1, P2)
    bool monotone = true;  // radii strictly decrease as the exit pressure increases
};

SweepTable sweep_exit_pressure(const RunConfig& c, const std::vector<double>& pressures);

// The verification verdict of a run: configured RH tolerance, equation residuals
// below kEquationTolerance, integral identities, every compatibility item.
inline constexpr double kEquationTolerance = 1e-5;
struct Verdict {
    bool converged = false;
    bool rh = false, equations = false, solvability = false, compatibility = false;
    bool all() const { return converged && rh && equations && solvability && compatibility; }
};
Verdict judge(const RunConfig& c, const RunReport& r);

// Hierarchical text summary of a run.
std::string report_json(const RunConfig& c, const RunReport& r);
void write_history_csv(const RunReport& r, const std::string& path);
void write_perturbation_csv(const Box& box, const PerturbationField& f, const std::string& path);
void write_kernels_csv(const Box& box, const FaceKernels& k, const std::string& path);

// Executes the configured mode and writes its artifacts to c.output.
// Returns the process exit status.
int run(const RunConfig& c, const RunOptions& opt = {});

}  // namespace transonic

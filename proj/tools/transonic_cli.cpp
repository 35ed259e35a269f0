#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "transonic/config.hpp"
#include "transonic/errors.hpp"
#include "transonic/runner.hpp"

int main(int argc, char** argv) {
    using namespace transonic;
    CLI::App app{"Shock-fitted transonic nozzle flow solver"};
    std::string config_path, mode, out;
    int grid_scale = 1, max_iters = 0;
    bool dump_kernels = false;
    app.add_option("--config", config_path, "configuration file (INI)");
    app.add_option("--mode", mode, "run mode")
        ->check(CLI::IsMember({"background", "inflow", "full", "sweep", "verify"}));
    app.add_option("--out", out, "output directory");
    app.add_option("--grid-scale", grid_scale, "uniform refinement multiplier")->check(CLI::PositiveNumber);
    app.add_option("--max-iters", max_iters, "iteration cap")->check(CLI::PositiveNumber);
    app.add_flag("--dump-kernels", dump_kernels, "write the shock-face kernels of the last step");
    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig c = config_path.empty() ? RunConfig::defaults() : load_config(config_path);
        if (!mode.empty()) c.mode = mode_from_name(mode);
        if (!out.empty()) c.output = out;
        if (max_iters > 0) c.solver.max_iters = max_iters;
        c = c.scaled(grid_scale);
        RunOptions opt;
        opt.dump_kernels = dump_kernels;
        opt.log = &std::cout;
        return run(c, opt);
    } catch (const SolverError& e) {
        std::cerr << fmt::format("error: {}{}\n", e.what(), e.stage().empty() ? "" : " [stage " + e.stage() + "]");
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

#include <doctest.h>

#include <string>

#include "transonic/config.hpp"
#include "transonic/errors.hpp"

using namespace transonic;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("an empty file yields the defaults") {
    const RunConfig c = parse_config("");
    const RunConfig d = RunConfig::defaults();
    CHECK(c.gas.gamma == 1.4);
    CHECK(c.geometry.r_exit == 2.0);
    CHECK(c.grid.radial == 32);
    CHECK(c.grid.angular == 16);
    CHECK(c.grid.angular_modes == 12);
    CHECK(c.shock_radius == 1.5);
    CHECK(c.inflow_modes.size() == d.inflow_modes.size());
    CHECK(c.mode == RunMode::full);
}

TEST_CASE("serialization round-trips") {
    RunConfig c = RunConfig::defaults();
    c.eps = 2.5e-3;
    c.gas.gamma = 1.3;
    c.grid.radial = 24;
    c.sweep_pressures = {1.1, 1.25};
    c.mode = RunMode::sweep;
    c.solver.frozen_inflow = true;
    c.exit_modes.push_back({2, 3, -0.25, Parity::cosine, Parity::cosine});
    const RunConfig r = parse_config(serialize_config(c));
    CHECK(serialize_config(r) == serialize_config(c));
    CHECK(r.eps == 2.5e-3);
    CHECK(r.exit_modes.size() == 2);
    CHECK(r.exit_modes[1].amplitude == -0.25);
    CHECK(r.inflow_modes[1].variable == InflowVariable::angular_velocity);
    CHECK(r.inflow_modes[1].shape.angular_parity == Parity::sine);
    CHECK(r.solver.frozen_inflow);
    CHECK(r.mode == RunMode::sweep);

    RunConfig empty = RunConfig::defaults();
    empty.exit_modes.clear();
    empty.inflow_modes.clear();
    CHECK(parse_config(serialize_config(empty)).inflow_modes.empty());
}

TEST_CASE("invalid input names the offending key") {
    CHECK(error_of("[grid]\nradial = 4\n").find("grid.radial") != std::string::npos);
    CHECK(error_of("[grid]\nbogus = 1\n").find("grid.bogus") != std::string::npos);
    CHECK(error_of("[gas]\ngamma = 0.9\n").find("gas.gamma") != std::string::npos);
    CHECK(error_of("[inflow]\neps = abc\n").find("inflow.eps") != std::string::npos);
    CHECK(error_of("[inflow]\nmodes = pressure 1\n").find("inflow.modes") != std::string::npos);
    CHECK(error_of("[run]\nmode = nonsense\n") != "");
    CHECK(error_of("[grid]\nangular_modes = 40\n").find("grid.angular_modes") != std::string::npos);
    CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), ConfigError);
}

TEST_CASE("grid scaling refines intervals and keeps modes") {
    const RunConfig c = RunConfig::defaults().scaled(2);
    CHECK(c.grid.radial == 64);
    CHECK(c.grid.axial == 32);
    CHECK(c.grid.stations == 128);
    CHECK(c.grid.axial_modes == 12);
    for (RunMode m : {RunMode::background, RunMode::inflow, RunMode::full, RunMode::sweep, RunMode::verify})
        CHECK(mode_from_name(mode_name(m)) == m);
}

TEST_CASE("boundary data norm grows with the mode content") {
    RunConfig c = RunConfig::defaults();
    const InflowBackground in = config_inflow(c);
    const double base = boundary_data_norm(c, in);
    CHECK(base > 0.0);
    c.inflow_modes.push_back({InflowVariable::pressure, {4, 4, 1.0, Parity::cosine, Parity::cosine}});
    CHECK(boundary_data_norm(c, in) > base);
}

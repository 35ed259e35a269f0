#include "transonic/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "transonic/errors.hpp"

namespace transonic {

namespace pt = boost::property_tree;

const char* mode_name(RunMode m) {
    switch (m) {
        case RunMode::background: return "background";
        case RunMode::inflow: return "inflow";
        case RunMode::full: return "full";
        case RunMode::sweep: return "sweep";
        case RunMode::verify: return "verify";
    }
    return "?";
}

RunMode mode_from_name(const std::string& name) {
    for (RunMode m : {RunMode::background, RunMode::inflow, RunMode::full, RunMode::sweep, RunMode::verify})
        if (name == mode_name(m)) return m;
    throw ConfigError(fmt::format("run.mode: unknown mode '{}'", name));
}

RunConfig RunConfig::defaults() {
    RunConfig c;
    c.exit_modes = {{1, 1, 1.0, Parity::cosine, Parity::cosine}};
    auto mode = [](InflowVariable v, int k, int l, double a) {
        return InflowMode{v, {k, l, a, required_angular_parity(v), required_axial_parity(v)}};
    };
    c.inflow_modes = {mode(InflowVariable::pressure, 1, 1, 1.0), mode(InflowVariable::angular_velocity, 2, 0, 0.5),
                      mode(InflowVariable::entropy, 1, 0, 0.5)};
    return c;
}

namespace {

void require(bool ok, const char* key, const std::string& why) {
    if (!ok) throw ConfigError(fmt::format("{}: {}", key, why));
}

}  // namespace

void RunConfig::validate() const {
    require(gas.gamma > 1.0, "gas.gamma", "must exceed 1");
    require(geometry.r_inlet > 0.0 && geometry.r_inlet < geometry.r_exit, "geometry.r_exit",
            "need 0 < r_inlet < r_exit");
    require(geometry.half_angle > 0.0 && geometry.half_angle < std::numbers::pi / 2, "geometry.half_angle",
            "must lie in (0, pi/2)");
    require(geometry.z_half > 0.0, "geometry.z_half", "must be positive");
    require(inlet.density > 0.0, "inlet.density", "must be positive");
    require(inlet.entropy_K > 0.0, "inlet.entropy", "must be positive");
    require(inlet.mach > 1.0, "inlet.mach", "must exceed 1");
    require(exit_pressure > 0.0 || (shock_radius > geometry.r_inlet && shock_radius < geometry.r_exit),
            "exit.shock_radius", "must lie strictly inside (r_inlet, r_exit)");
    for (const auto& m : exit_modes)
        require(m.angular_parity == Parity::cosine && m.axial_parity == Parity::cosine && m.angular_index >= 0 &&
                    m.axial_index >= 0 && std::isfinite(m.amplitude),
                "exit.modes", "cosine modes with non-negative indices only");
    require(eps >= 0.0 && std::isfinite(eps), "inflow.eps", "must be non-negative");
    for (const auto& m : inflow_modes)
        require(m.shape.angular_index >= 0 && m.shape.axial_index >= 0 && std::isfinite(m.shape.amplitude),
                "inflow.modes", "non-negative indices and finite amplitudes");
    require(grid.radial >= 8, "grid.radial", "at least 8 intervals");
    require(grid.angular >= 4, "grid.angular", "at least 4 intervals");
    require(grid.axial >= 4, "grid.axial", "at least 4 intervals");
    require(grid.angular_modes >= 1 && grid.angular_modes <= grid.angular, "grid.angular_modes",
            "between 1 and the angular interval count");
    require(grid.axial_modes >= 1 && grid.axial_modes <= grid.axial, "grid.axial_modes",
            "between 1 and the axial interval count");
    require(grid.stations >= 4, "grid.stations", "at least 4 stations");
    require(solver.fixed_point_tolerance > 0.0, "solver.fixed_point_tolerance", "must be positive");
    require(solver.linear_tolerance > 0.0, "solver.linear_tolerance", "must be positive");
    require(solver.rh_tolerance > 0.0, "solver.rh_tolerance", "must be positive");
    require(solver.max_iters >= 1, "solver.max_iters", "at least 1");
    require(solver.relaxation > 0.0 && solver.relaxation <= 1.0, "solver.relaxation", "must lie in (0, 1]");
    for (double p : sweep_pressures) require(p > 0.0, "sweep.pressures", "pressures must be positive");
}

RunConfig RunConfig::scaled(int s) const {
    require(s >= 1, "grid-scale", "must be at least 1");
    RunConfig c = *this;
    c.grid.radial *= s;
    c.grid.angular *= s;
    c.grid.axial *= s;
    c.grid.stations *= s;
    return c;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
    return out;
}

// "k l amplitude; ..." for exit modes
std::vector<CrossSectionMode> parse_exit_modes(const std::string& s) {
    std::vector<CrossSectionMode> out;
    for (const auto& item : split(s, ';')) {
        std::istringstream in(item);
        CrossSectionMode m;
        std::string rest;
        if (!(in >> m.angular_index >> m.axial_index >> m.amplitude) || (in >> rest))
            throw ConfigError(fmt::format("exit.modes: cannot parse '{}' (expected 'k l amplitude')", item));
        out.push_back(m);
    }
    return out;
}

// "variable k l amplitude; ..." for inflow modes, parities from the variable
std::vector<InflowMode> parse_inflow_modes(const std::string& s) {
    std::vector<InflowMode> out;
    for (const auto& item : split(s, ';')) {
        std::istringstream in(item);
        std::string name, rest;
        InflowMode m;
        if (!(in >> name >> m.shape.angular_index >> m.shape.axial_index >> m.shape.amplitude) || (in >> rest))
            throw ConfigError(fmt::format("inflow.modes: cannot parse '{}' (expected 'variable k l amplitude')", item));
        m.variable = variable_from_name(name);
        m.shape.angular_parity = required_angular_parity(m.variable);
        m.shape.axial_parity = required_axial_parity(m.variable);
        out.push_back(m);
    }
    return out;
}

std::vector<double> parse_list(const std::string& s, const char* key) {
    std::vector<double> out;
    for (const auto& item : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ConfigError(fmt::format("{}: cannot parse '{}'", key, item));
        }
    }
    return out;
}

template <class T>
void read(const pt::ptree& tree, const char* key, T& target) {
    const auto node = tree.get_child_optional(pt::ptree::path_type(key, '.'));
    if (!node) return;
    try {
        target = node->get_value<T>();
    } catch (const pt::ptree_error&) {
        throw ConfigError(fmt::format("{}: cannot parse '{}'", key, node->data()));
    }
}

const std::set<std::string> kKnownKeys = {
    "gas.gamma",           "geometry.r_inlet",        "geometry.r_exit",     "geometry.half_angle",
    "geometry.z_half",     "inlet.density",           "inlet.entropy",       "inlet.mach",
    "exit.pressure",       "exit.shock_radius",       "exit.modes",          "inflow.eps",
    "inflow.modes",        "grid.radial",             "grid.angular",        "grid.axial",
    "grid.angular_modes",  "grid.axial_modes",        "grid.stations",       "solver.fixed_point_tolerance",
    "solver.linear_tolerance", "solver.rh_tolerance", "solver.max_iters",    "solver.relaxation",
    "solver.enforce_trust_radius", "solver.frozen_inflow", "sweep.pressures", "run.mode",
    "run.output"};

}  // namespace

RunConfig parse_config(const std::string& text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(fmt::format("config line {}: {}", e.line(), e.message()));
    }
    for (const auto& [section, body] : tree) {
        if (body.empty()) throw ConfigError(fmt::format("{}: key outside any section", section));
        for (const auto& [key, value] : body) {
            const std::string full = section + "." + key;
            if (!kKnownKeys.count(full)) throw ConfigError(fmt::format("{}: unknown key", full));
        }
    }
    RunConfig c = RunConfig::defaults();
    read(tree, "gas.gamma", c.gas.gamma);
    read(tree, "geometry.r_inlet", c.geometry.r_inlet);
    read(tree, "geometry.r_exit", c.geometry.r_exit);
    read(tree, "geometry.half_angle", c.geometry.half_angle);
    read(tree, "geometry.z_half", c.geometry.z_half);
    read(tree, "inlet.density", c.inlet.density);
    read(tree, "inlet.entropy", c.inlet.entropy_K);
    read(tree, "inlet.mach", c.inlet.mach);
    read(tree, "exit.pressure", c.exit_pressure);
    read(tree, "exit.shock_radius", c.shock_radius);
    if (auto s = tree.get_optional<std::string>("exit.modes")) c.exit_modes = parse_exit_modes(*s);
    read(tree, "inflow.eps", c.eps);
    if (auto s = tree.get_optional<std::string>("inflow.modes")) c.inflow_modes = parse_inflow_modes(*s);
    read(tree, "grid.radial", c.grid.radial);
    read(tree, "grid.angular", c.grid.angular);
    read(tree, "grid.axial", c.grid.axial);
    read(tree, "grid.angular_modes", c.grid.angular_modes);
    read(tree, "grid.axial_modes", c.grid.axial_modes);
    read(tree, "grid.stations", c.grid.stations);
    read(tree, "solver.fixed_point_tolerance", c.solver.fixed_point_tolerance);
    read(tree, "solver.linear_tolerance", c.solver.linear_tolerance);
    read(tree, "solver.rh_tolerance", c.solver.rh_tolerance);
    read(tree, "solver.max_iters", c.solver.max_iters);
    read(tree, "solver.relaxation", c.solver.relaxation);
    read(tree, "solver.enforce_trust_radius", c.solver.enforce_trust_radius);
    read(tree, "solver.frozen_inflow", c.solver.frozen_inflow);
    if (auto s = tree.get_optional<std::string>("sweep.pressures"))
        c.sweep_pressures = parse_list(*s, "sweep.pressures");
    if (auto s = tree.get_optional<std::string>("run.mode")) c.mode = mode_from_name(*s);
    read(tree, "run.output", c.output);
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
    std::string exit_modes, inflow_modes, sweep;
    for (const auto& m : c.exit_modes)
        exit_modes += fmt::format("{}{} {} {}", exit_modes.empty() ? "" : "; ", m.angular_index, m.axial_index,
                                  m.amplitude);
    for (const auto& m : c.inflow_modes)
        inflow_modes += fmt::format("{}{} {} {} {}", inflow_modes.empty() ? "" : "; ", variable_name(m.variable),
                                    m.shape.angular_index, m.shape.axial_index, m.shape.amplitude);
    for (double p : c.sweep_pressures) sweep += fmt::format("{}{}", sweep.empty() ? "" : ", ", p);
    std::string out;
    out += fmt::format("[gas]\ngamma = {}\n\n", c.gas.gamma);
    out += fmt::format("[geometry]\nr_inlet = {}\nr_exit = {}\nhalf_angle = {}\nz_half = {}\n\n", c.geometry.r_inlet,
                       c.geometry.r_exit, c.geometry.half_angle, c.geometry.z_half);
    out += fmt::format("[inlet]\ndensity = {}\nentropy = {}\nmach = {}\n\n", c.inlet.density, c.inlet.entropy_K,
                       c.inlet.mach);
    out += fmt::format("[exit]\npressure = {}\nshock_radius = {}\nmodes = {}\n\n", c.exit_pressure, c.shock_radius,
                       exit_modes);
    out += fmt::format("[inflow]\neps = {}\nmodes = {}\n\n", c.eps, inflow_modes);
    out += fmt::format("[grid]\nradial = {}\nangular = {}\naxial = {}\nangular_modes = {}\naxial_modes = {}\n"
                       "stations = {}\n\n",
                       c.grid.radial, c.grid.angular, c.grid.axial, c.grid.angular_modes, c.grid.axial_modes,
                       c.grid.stations);
    out += fmt::format("[solver]\nfixed_point_tolerance = {}\nlinear_tolerance = {}\nrh_tolerance = {}\n"
                       "max_iters = {}\nrelaxation = {}\nenforce_trust_radius = {}\nfrozen_inflow = {}\n\n",
                       c.solver.fixed_point_tolerance, c.solver.linear_tolerance, c.solver.rh_tolerance,
                       c.solver.max_iters, c.solver.relaxation, c.solver.enforce_trust_radius ? "true" : "false",
                       c.solver.frozen_inflow ? "true" : "false");
    out += fmt::format("[sweep]\npressures = {}\n\n", sweep);
    out += fmt::format("[run]\nmode = {}\noutput = {}\n", mode_name(c.mode), c.output);
    return out;
}

InflowBackground config_inflow(const RunConfig& c) { return make_inflow_background(c.gas, c.geometry, c.inlet); }

double config_shock_radius(const RunConfig& c, const InflowBackground& inflow) {
    return c.exit_pressure > 0.0 ? find_shock_radius(inflow, c.exit_pressure) : c.shock_radius;
}

Box config_box(const RunConfig& c, double shock_radius) {
    return Box::make(shock_radius, c.geometry.r_exit, c.geometry.half_angle, c.geometry.z_half, c.grid.radial,
                     c.grid.angular, c.grid.axial);
}

Field2 config_exit_perturbation(const RunConfig& c, const Box& box) {
    Field2 p(box);
    for (int j = 0; j < box.nt(); ++j)
        for (int k = 0; k < box.nz(); ++k)
            p(j, k) = evaluate_modes(c.exit_modes, c.geometry, box.angular.x(j), box.axial.x(k));
    return p;
}

SupersonicField config_supersonic(const RunConfig& c, const InflowBackground& inflow, const Box& box) {
    const InletPerturbation inlet = make_inlet(c.eps, c.inflow_modes, c.geometry);
    if (c.solver.frozen_inflow) return frozen_supersonic(inflow, inlet, box.angular, box.axial, c.grid.stations);
    MarchOptions opt;
    opt.stations = c.grid.stations;
    return march_supersonic(inflow, inlet, box.angular, box.axial, opt);
}

double boundary_data_norm(const RunConfig& c, const InflowBackground& inflow) {
    const NozzleGeometry& g = c.geometry;
    const double L = g.r_exit - g.r_inlet;
    auto mode_norm = [&](const CrossSectionMode& m, double r) {
        const double k = m.angular_index * std::numbers::pi / (2.0 * g.half_angle) / r;
        const double l = m.axial_index * std::numbers::pi / (2.0 * g.z_half);
        const double w = L * std::max(k, l);
        return std::abs(m.amplitude) * (1.0 + w + w * w);
    };
    const BranchPoint in = solve_branch(inflow.gas, inflow.supersonic.mass_flux_m, inflow.supersonic.B,
                                        inflow.supersonic.K, g.r_inlet, Branch::supersonic);
    const double P_in = inflow.supersonic.K * std::pow(in.density, inflow.gas.gamma);
    double inlet = 0.0;
    for (const auto& m : c.inflow_modes) {
        double scale = in.speed;
        if (m.variable == InflowVariable::pressure) scale = P_in;
        if (m.variable == InflowVariable::entropy) scale = inflow.supersonic.K;
        inlet += mode_norm(m.shape, g.r_inlet) / scale;
    }
    const BackgroundSolution bg(inflow, config_shock_radius(c, inflow));
    double exit = 0.0;
    for (const auto& m : c.exit_modes) exit += mode_norm(m, g.r_exit) / bg.pressure(g.r_exit);
    return std::max(inlet, exit);
}

Problem config_problem(const RunConfig& c) {
    const InflowBackground inflow = config_inflow(c);
    const double rs = config_shock_radius(c, inflow);
    const Box box = config_box(c, rs);
    return Problem(box, c.grid.angular_modes, c.grid.axial_modes, inflow, rs, config_supersonic(c, inflow, box),
                   config_exit_perturbation(c, box), c.eps, boundary_data_norm(c, inflow));
}

IterationOptions config_iteration(const RunConfig& c) {
    IterationOptions o;
    o.max_iters = c.solver.max_iters;
    o.tolerance = c.solver.fixed_point_tolerance;
    o.relaxation = c.solver.relaxation;
    o.enforce_trust_radius = c.solver.enforce_trust_radius;
    return o;
}

}  // namespace transonic

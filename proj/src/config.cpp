#include "lelab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lelab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw ConfigError(line, "expected a number, got '" + v + "'");
    }
}

long parse_int(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw ConfigError(line, "expected an integer, got '" + v + "'");
    }
}

Policy parse_policy(const std::string& v, int line) {
    if (v == "warn") return Policy::Warn;
    if (v == "abort") return Policy::Abort;
    throw ConfigError(line, "expected 'warn' or 'abort', got '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError(line, "empty entry in list");
        out.push_back(parse_double(item, line));
    }
    if (out.empty()) throw ConfigError(line, "empty list");
    return out;
}

}  // namespace

EvolveConfig RunConfig::evolve_config() const {
    EvolveConfig e;
    e.dt = dt;
    e.t_end = t_end;
    e.b = b;
    e.rt_policy = rt_policy;
    e.smallness_policy = smallness_policy;
    e.eps = eps;
    e.delta = delta;
    e.pressure_tol = pressure_tol;
    e.pressure_max_iter = pressure_max_iter;
    return e;
}

void RunConfig::validate() const {
    auto fail = [](const std::string& m) { throw ConfigError(0, m); };
    if (n1 < 2 || n1 % 2 != 0 || n2 < 2 || n2 % 2 != 0) fail("n1, n2 must be even and >= 2");
    if (n3 < 5) fail("n3 must be >= 5");
    if (!(delta > 0.0 && delta <= 0.5)) fail("delta must lie in (0, 0.5]");
    if (!(dt > 0.0)) fail("dt must be positive");
    if (!(t_end > 0.0 && t_end <= 1.0)) fail("t_end must lie in (0, 1]");
    if (!(b > 0.0)) fail("b must be positive");
    if (!(eps > 0.0 && eps <= 1.0)) fail("eps must lie in (0, 1]");
    for (double r : r_sweep)
        if (!(r > 0.0 && r <= 1.0)) fail("every r must lie in (0, 1]");
    if (checkpoint_interval < 0) fail("checkpoint_interval must be >= 0");
    if (pressure_max_iter < 1) fail("pressure_max_iter must be >= 1");
    if (!(pressure_tol > 0.0)) fail("pressure_tol must be positive");
    if (preset != "rest" && preset != "shear" && preset != "generic")
        fail("preset must be rest, shear or generic");
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(lineno, "empty key");
        if (val.empty()) throw ConfigError(lineno, "empty value for '" + key + "'");

        if (key == "n1") cfg.n1 = static_cast<int>(parse_int(val, lineno));
        else if (key == "n2") cfg.n2 = static_cast<int>(parse_int(val, lineno));
        else if (key == "n3") cfg.n3 = static_cast<int>(parse_int(val, lineno));
        else if (key == "delta") cfg.delta = parse_double(val, lineno);
        else if (key == "r" || key == "r_sweep") cfg.r_sweep = parse_list(val, lineno);
        else if (key == "dt") cfg.dt = parse_double(val, lineno);
        else if (key == "t_end") cfg.t_end = parse_double(val, lineno);
        else if (key == "b") cfg.b = parse_double(val, lineno);
        else if (key == "eps") cfg.eps = parse_double(val, lineno);
        else if (key == "kappa") cfg.kappa = parse_double(val, lineno);
        else if (key == "rt_policy") cfg.rt_policy = parse_policy(val, lineno);
        else if (key == "smallness_policy") cfg.smallness_policy = parse_policy(val, lineno);
        else if (key == "preset") cfg.preset = val;
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(val, lineno));
        else if (key == "checkpoint_interval")
            cfg.checkpoint_interval = static_cast<int>(parse_int(val, lineno));
        else if (key == "pressure_tol") cfg.pressure_tol = parse_double(val, lineno);
        else if (key == "pressure_max_iter")
            cfg.pressure_max_iter = static_cast<int>(parse_int(val, lineno));
        else if (key == "z_chi_lo") cfg.z_chi_lo = parse_double(val, lineno);
        else if (key == "chi_width") cfg.chi_width = parse_double(val, lineno);
        else if (key == "z_psi_lo") cfg.z_psi_lo = parse_double(val, lineno);
        else if (key == "psi_width") cfg.psi_width = parse_double(val, lineno);
        else throw ConfigError(lineno, "unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(0, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace lelab

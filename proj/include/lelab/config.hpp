// config.hpp: flat key = value run configuration, '#' comments, one
// namespace. Parse failures carry the offending line number.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lelab/evolve.hpp"

namespace lelab {

class ConfigError : public std::runtime_error {
  public:
    ConfigError(int line, const std::string& msg)
        : std::runtime_error("config:" + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

struct RunConfig {
    int n1 = 32, n2 = 32, n3 = 33;
    double delta = 0.25;
    std::vector<double> r_sweep = {0.2, 0.1, 0.05, 0.025};
    double dt = 1e-3;
    double t_end = 0.1;
    double b = 1.0;
    double eps = 0.25;
    double kappa = 1e-4;  // twin-run perturbation scale
    Policy rt_policy = Policy::Warn;
    Policy smallness_policy = Policy::Warn;
    std::string preset = "generic";
    std::uint64_t seed = 12345;
    int checkpoint_interval = 0;  // steps between checkpoints; 0 disables
    double pressure_tol = 1e-11;
    int pressure_max_iter = 60;
    double z_chi_lo = 0.6, chi_width = 0.1;
    double z_psi_lo = 0.8, psi_width = 0.05;

    EvolveConfig evolve_config() const;
    void validate() const;  // throws ConfigError (line 0) on bad values
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace lelab

// checkpoint.hpp: binary snapshots. Layout: magic "LELB", u32 format
// version, u32 n1 n2 n3, f64 t delta r, then seven plane-major f64 arrays
// in order: eta displacement (3 components), v (3), q. Little-endian
// throughout; save/load round-trips are bitwise identical.
#pragma once

#include <cstdint>
#include <string>

#include "lelab/state.hpp"

namespace lelab {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointData {
    double t = 0.0, delta = 0.0, r = 0.0;
    VectorField eta_disp;
    VectorField v;
    ScalarField q;
};

void save_checkpoint(const std::string& path, const LagrangianState& s, double delta, double r);
void save_checkpoint(const std::string& path, const CheckpointData& data);
CheckpointData load_checkpoint(const std::string& path);

}  // namespace lelab

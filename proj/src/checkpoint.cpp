#include "lelab/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "checkpoint format is little-endian; big-endian hosts unsupported");

namespace lelab {

namespace {

void write_u32(std::ofstream& o, std::uint32_t v) {
    o.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_f64(std::ofstream& o, double v) {
    o.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
std::uint32_t read_u32(std::ifstream& i) {
    std::uint32_t v = 0;
    i.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}
double read_f64(std::ifstream& i) {
    double v = 0;
    i.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

}  // namespace

void save_checkpoint(const std::string& path, const CheckpointData& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_checkpoint: cannot open '" + path + "'");
    const Grid& g = d.v.grid();
    out.write("LELB", 4);
    write_u32(out, kCheckpointVersion);
    write_u32(out, static_cast<std::uint32_t>(g.n1()));
    write_u32(out, static_cast<std::uint32_t>(g.n2()));
    write_u32(out, static_cast<std::uint32_t>(g.n3()));
    write_f64(out, d.t);
    write_f64(out, d.delta);
    write_f64(out, d.r);
    auto write_field = [&](const ScalarField& f) {
        out.write(reinterpret_cast<const char*>(f.data()),
                  static_cast<std::streamsize>(f.size() * sizeof(double)));
    };
    for (int i = 0; i < 3; ++i) write_field(d.eta_disp.c[i]);
    for (int i = 0; i < 3; ++i) write_field(d.v.c[i]);
    write_field(d.q);
    if (!out) throw std::runtime_error("save_checkpoint: write failed for '" + path + "'");
}

void save_checkpoint(const std::string& path, const LagrangianState& s, double delta, double r) {
    CheckpointData d;
    d.t = s.t;
    d.delta = delta;
    d.r = r;
    d.eta_disp = s.eta_disp;
    d.v = s.v;
    d.q = s.q;
    save_checkpoint(path, d);
}

CheckpointData load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_checkpoint: cannot open '" + path + "'");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "LELB", 4) != 0)
        throw std::runtime_error("load_checkpoint: bad magic in '" + path + "'");
    const std::uint32_t version = read_u32(in);
    if (version != kCheckpointVersion)
        throw std::runtime_error("load_checkpoint: unsupported format version");
    const int n1 = static_cast<int>(read_u32(in));
    const int n2 = static_cast<int>(read_u32(in));
    const int n3 = static_cast<int>(read_u32(in));
    GridPtr grid = make_grid(n1, n2, n3);

    CheckpointData d;
    d.t = read_f64(in);
    d.delta = read_f64(in);
    d.r = read_f64(in);
    d.eta_disp = VectorField(grid);
    d.v = VectorField(grid);
    d.q = ScalarField(grid);
    auto read_field = [&](ScalarField& f) {
        in.read(reinterpret_cast<char*>(f.data()),
                static_cast<std::streamsize>(f.size() * sizeof(double)));
    };
    for (int i = 0; i < 3; ++i) read_field(d.eta_disp.c[i]);
    for (int i = 0; i < 3; ++i) read_field(d.v.c[i]);
    read_field(d.q);
    if (!in) throw std::runtime_error("load_checkpoint: truncated file '" + path + "'");
    return d;
}

}  // namespace lelab

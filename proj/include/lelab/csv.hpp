// csv.hpp: deterministic CSV output. Every float is written with
// std::to_chars (locale-free) in scientific notation at 17 significant
// digits, so identical runs produce identical bytes. The first line names
// the schema, the second is the header row.
#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace lelab {

std::string format_double(double v);

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& schema,
              const std::vector<std::string>& columns);

    void row(const std::vector<std::string>& cells);
    void row_doubles(const std::vector<double>& cells);
    void comment(const std::string& text);

    bool good() const { return out_.good(); }

  private:
    std::ofstream out_;
    std::size_t ncols_;
};

}  // namespace lelab

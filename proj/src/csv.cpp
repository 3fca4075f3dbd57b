#include "lelab/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace lelab {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& schema,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), ncols_(columns.size()) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open '" + path + "'");
    out_ << "# schema: " << schema << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "");
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_) throw std::runtime_error("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i)
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "");
    out_ << "\n";
}

void CsvWriter::row_doubles(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(format_double(v));
    row(s);
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

}  // namespace lelab

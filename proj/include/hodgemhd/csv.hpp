#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgemhd {
namespace csv {

/// Fixed shortest-round-trip formatting; keeps CSV output byte-identical
/// across runs with the same inputs.
inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string integer(long long v) { return std::to_string(v); }

} // namespace csv

/// Comma-separated writer with a schema-version comment line, '.' decimal
/// separator and a header row.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& schema,
              const std::vector<std::string>& columns)
        : out_(path) {
        if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
        out_ << "# schema=" << schema << "\n";
        write_row(columns);
    }

    void write_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out_ << cells[i] << (i + 1 == cells.size() ? "" : ",");
        out_ << "\n";
    }

    void close() { out_.close(); }

private:
    std::ofstream out_;
};

} // namespace hodgemhd

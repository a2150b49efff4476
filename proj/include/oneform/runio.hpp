#pragma once

#include <string>
#include <vector>

#include "oneform/analysis.hpp"

namespace oneform {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSummarySchemaVersion = 1;

// deterministic float formatting for result files
std::string fmt_num(double v);

// '#'-prefixed stamp lines: tool version, config echo, seed, lattice header
std::string file_stamp(const std::string& config_echo, uint64_t seed,
                       const std::string& lattice_header);

void write_text_file(const std::string& path, const std::string& content);

// wz-scan style CSV reader: '#' comments, named columns; used by collapse
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int col(const std::string& name) const;  // -1 when absent
};
CsvTable read_csv(const std::string& path);

// group rows into per-size curves using the named columns
std::vector<Curve> curves_from_table(const CsvTable& table, const std::string& size_col,
                                     const std::string& x_col, const std::string& y_col,
                                     const std::string& err_col);

} // namespace oneform

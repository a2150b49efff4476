#include "oneform/runio.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oneform {

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string file_stamp(const std::string& config_echo, uint64_t seed,
                       const std::string& lattice_header) {
    std::ostringstream os;
    os << "# oneform " << kToolVersion << "\n";
    os << "# config " << config_echo << "\n";
    os << "# seed " << seed << "\n";
    os << "# lattice " << lattice_header << "\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

int CsvTable::col(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

CsvTable read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    CsvTable t;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (t.columns.empty()) {
            t.columns = cells;
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) row.push_back(c.empty() ? 0.0 : std::stod(c));
        t.rows.push_back(row);
    }
    if (t.columns.empty()) throw std::runtime_error("empty CSV: " + path);
    return t;
}

std::vector<Curve> curves_from_table(const CsvTable& table, const std::string& size_col,
                                     const std::string& x_col, const std::string& y_col,
                                     const std::string& err_col) {
    const int cs = table.col(size_col), cx = table.col(x_col), cy = table.col(y_col);
    const int ce = table.col(err_col);
    if (cs < 0 || cx < 0 || cy < 0)
        throw std::runtime_error("CSV lacks required columns " + size_col + "," + x_col + "," + y_col);
    std::map<double, Curve> by_size;
    for (const auto& row : table.rows) {
        Curve& c = by_size[row[cs]];
        c.label = row[cs];
        c.x.push_back(row[cx]);
        c.y.push_back(row[cy]);
        c.yerr.push_back(ce >= 0 ? row[ce] : 0.0);
    }
    std::vector<Curve> out;
    for (auto& [label, c] : by_size) {
        // sort each curve by abscissa
        std::vector<size_t> idx(c.x.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return c.x[a] < c.x[b]; });
        Curve s;
        s.label = c.label;
        for (size_t i : idx) {
            s.x.push_back(c.x[i]);
            s.y.push_back(c.y[i]);
            s.yerr.push_back(c.yerr[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace oneform

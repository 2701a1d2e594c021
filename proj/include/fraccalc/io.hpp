#ifndef FRACCALC_IO_HPP
#define FRACCALC_IO_HPP

#include <string>
#include <utility>
#include <vector>

namespace fraccalc::io {

inline constexpr const char* kVersion = "0.1.0";

/// One plotted/tabulated series.
struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// CSV document: "# fraccalc <version>" comment line, header row, then data
/// rows with 12 significant digits and LF endings. Deterministic for fixed
/// input.
std::string csv_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows);

/// Self-contained 800x600 SVG line plot: linear axes with ticks, one
/// polyline per series, text legend. Non-finite points are skipped.
std::string svg_plot(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<Series>& series);

void write_file(const std::string& path, const std::string& content);

} // namespace fraccalc::io

#endif

#include "fraccalc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fraccalc::io {

namespace {

std::string num(double v, const char* f = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

// Round tick spacing to 1/2/5 * 10^k.
double nice_step(double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.5) return 2.0 * mag;
    if (r < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

} // namespace

std::string csv_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
    std::string out = "# fraccalc ";
    out += kVersion;
    out += '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw std::domain_error("csv_table: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += num(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string svg_plot(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<Series>& series) {
    const double W = 800, H = 600, ml = 70, mr = 30, mt = 50, mb = 60;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (!any) {
                xmin = xmax = x;
                ymin = ymax = y;
                any = true;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double yr = ymax - ymin;
    ymin -= 0.05 * yr;
    ymax += 0.05 * yr;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
           "font-family=\"sans-serif\" font-size=\"13\">\n";
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"17\">" + title +
           "</text>\n";
    // axes
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(H - mb) + "\" x2=\"" + num(W - mr) +
           "\" y2=\"" + num(H - mb) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) + "\" y2=\"" +
           num(H - mb) + "\" stroke=\"black\"/>\n";
    const double xs = nice_step(xmax - xmin), ys = nice_step(ymax - ymin);
    for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-12 * xs; t += xs) {
        svg += "<line x1=\"" + num(px(t)) + "\" y1=\"" + num(H - mb) + "\" x2=\"" + num(px(t)) +
               "\" y2=\"" + num(H - mb + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px(t)) + "\" y=\"" + num(H - mb + 20) +
               "\" text-anchor=\"middle\">" + num(t, "%.6g") + "</text>\n";
    }
    for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-12 * ys; t += ys) {
        svg += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(py(t)) + "\" x2=\"" + num(ml) +
               "\" y2=\"" + num(py(t)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(py(t) + 4) +
               "\" text-anchor=\"end\">" + num(t, "%.6g") + "</text>\n";
    }
    svg += "<text x=\"" + num((ml + W - mr) / 2) + "\" y=\"" + num(H - 15) +
           "\" text-anchor=\"middle\">" + xlabel + "</text>\n";
    svg += "<text x=\"18\" y=\"" + num((mt + H - mb) / 2) + "\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " + num((mt + H - mb) / 2) + ")\">" + ylabel +
           "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % 6];
        std::string pts;
        for (const auto& [x, y] : series[si].points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            pts += num(px(x), "%.6g");
            pts += ',';
            pts += num(py(y), "%.6g");
            pts += ' ';
        }
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
        const double ly = mt + 18.0 * static_cast<double>(si);
        svg += "<line x1=\"" + num(W - mr - 150) + "\" y1=\"" + num(ly) + "\" x2=\"" +
               num(W - mr - 120) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(W - mr - 112) + "\" y=\"" + num(ly + 4) + "\">" +
               series[si].name + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

} // namespace fraccalc::io

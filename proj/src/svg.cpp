#include "k3nu/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace k3nu {

namespace {

// Fixed layout so output is fully determined by the data.
constexpr double margin_left = 70.0;
constexpr double margin_right = 20.0;
constexpr double margin_top = 20.0;
constexpr double margin_bottom = 50.0;
constexpr int n_ticks = 5;

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
constexpr int palette_size = 8;

std::string fmt(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Range {
    double lo = 0.0, hi = 1.0;
};

Range y_range(const std::vector<Series>& series) {
    double lo = series[0].y[0], hi = lo;
    for (const Series& s : series)
        for (double v : s.y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (lo == hi) {
        // Degenerate (constant) data: pad so the line sits at mid-height.
        double pad = std::max(1.0, std::fabs(lo));
        lo -= pad;
        hi += pad;
    }
    return {lo, hi};
}

Range x_range(const std::vector<Series>& series) {
    double lo = series[0].x.front(), hi = series[0].x.back();
    for (const Series& s : series)
        for (double v : s.x) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    }
    return {lo, hi};
}

std::string render(const std::vector<Series>& series, const SvgOptions& opt) {
    if (series.empty()) throw std::invalid_argument("svg: no series selected");
    for (const Series& s : series)
        if (s.x.size() < 2) throw std::invalid_argument("svg: need at least two rows to plot");

    const double w = opt.width, h = opt.height;
    const double px0 = margin_left, px1 = w - margin_right;
    const double py0 = margin_top, py1 = h - margin_bottom;
    const Range xr = x_range(series);
    const Range yr = y_range(series);

    auto sx = [&](double v) { return px0 + (v - xr.lo) / (xr.hi - xr.lo) * (px1 - px0); };
    auto sy = [&](double v) { return py1 - (v - yr.lo) / (yr.hi - yr.lo) * (py1 - py0); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << opt.width << " "
        << opt.height << "\" width=\"" << opt.width << "\" height=\"" << opt.height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height
        << "\" fill=\"#ffffff\"/>\n";

    // Grid and ticks.
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (int i = 0; i < n_ticks; ++i) {
        double tx = xr.lo + (xr.hi - xr.lo) * i / (n_ticks - 1);
        double ty = yr.lo + (yr.hi - yr.lo) * i / (n_ticks - 1);
        double gx = sx(tx), gy = sy(ty);
        out << "<line x1=\"" << fmt(gx) << "\" y1=\"" << fmt(py0) << "\" x2=\"" << fmt(gx)
            << "\" y2=\"" << fmt(py1) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << fmt(px0) << "\" y1=\"" << fmt(gy) << "\" x2=\"" << fmt(px1)
            << "\" y2=\"" << fmt(gy) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(gx) << "\" y=\"" << fmt(py1 + 18.0)
            << "\" text-anchor=\"middle\">" << fmt_tick(tx) << "</text>\n";
        out << "<text x=\"" << fmt(px0 - 8.0) << "\" y=\"" << fmt(gy + 4.0)
            << "\" text-anchor=\"end\">" << fmt_tick(ty) << "</text>\n";
    }
    // Axis frame.
    out << "<rect x=\"" << fmt(px0) << "\" y=\"" << fmt(py0) << "\" width=\"" << fmt(px1 - px0)
        << "\" height=\"" << fmt(py1 - py0)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    if (!opt.x_label.empty())
        out << "<text x=\"" << fmt((px0 + px1) / 2.0) << "\" y=\"" << fmt(h - 12.0)
            << "\" text-anchor=\"middle\">" << opt.x_label << "</text>\n";
    if (!opt.y_label.empty())
        out << "<text x=\"" << fmt(px0) << "\" y=\"" << fmt(py0 - 6.0)
            << "\" text-anchor=\"start\">" << opt.y_label << "</text>\n";
    out << "</g>\n";

    // Data polylines.
    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series& s = series[k];
        out << "<polyline fill=\"none\" stroke=\"" << palette[k % palette_size]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) out << ' ';
            out << fmt(sx(s.x[i])) << ',' << fmt(sy(s.y[i]));
        }
        out << "\"/>\n";
    }

    // Legend, top-right inside the plot box.
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        double ly = py0 + 10.0 + 18.0 * static_cast<double>(k);
        out << "<rect x=\"" << fmt(px1 - 150.0) << "\" y=\"" << fmt(ly) << "\" width=\"12\""
            << " height=\"12\" fill=\"" << palette[k % palette_size] << "\"/>\n";
        out << "<text x=\"" << fmt(px1 - 132.0) << "\" y=\"" << fmt(ly + 10.0) << "\">"
            << series[k].label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

double base_column(const ScanRow& r, const std::string& name, bool& ok) {
    ok = true;
    if (name == "k3_dirac") return r.k3_dirac;
    if (name == "k3_majorana") return r.k3_majorana;
    if (name == "delta_k3") return r.delta_k3;
    ok = false;
    return 0.0;
}

double corr_column(const CorrelationRow& r, const std::string& name, bool& ok) {
    double v = base_column(r, name, ok);
    if (ok) return v;
    ok = true;
    if (name == "c21") return r.c21;
    if (name == "c32") return r.c32;
    if (name == "c31") return r.c31;
    if (name == "dc21") return r.dc21;
    if (name == "dc32") return r.dc32;
    if (name == "dc31") return r.dc31;
    ok = false;
    return 0.0;
}

template <typename Row, typename Getter>
std::vector<Series> collect(const std::vector<Row>& rows,
                            const std::vector<std::string>& columns, Getter get) {
    if (columns.empty()) throw std::invalid_argument("svg: no columns selected");
    std::vector<Series> series;
    for (const std::string& name : columns) {
        Series s;
        s.label = name;
        for (const Row& r : rows) {
            bool ok = false;
            double v = get(r, name, ok);
            if (!ok) throw std::invalid_argument("svg: unknown column '" + name + "'");
            s.x.push_back(r.param_value);
            s.y.push_back(v);
        }
        series.push_back(std::move(s));
    }
    return series;
}

SvgOptions with_x_label(const SvgOptions& opt, const ScanSpec& spec) {
    SvgOptions o = opt;
    if (o.x_label.empty()) o.x_label = to_string(spec.parameter);
    return o;
}

}  // namespace

std::vector<std::string> svg_columns(const ScanResult&) {
    return {"k3_dirac", "k3_majorana", "delta_k3"};
}

std::vector<std::string> svg_columns(const CorrelationScanResult&) {
    return {"k3_dirac", "k3_majorana", "delta_k3", "c21", "c32", "c31", "dc21", "dc32", "dc31"};
}

std::string emit_svg(const ScanResult& r, const std::vector<std::string>& columns,
                     const SvgOptions& opt) {
    return render(collect(r.rows, columns, base_column), with_x_label(opt, r.spec));
}

std::string emit_svg(const CorrelationScanResult& r, const std::vector<std::string>& columns,
                     const SvgOptions& opt) {
    return render(collect(r.rows, columns, corr_column), with_x_label(opt, r.spec));
}

std::string emit_svg_family(const std::vector<ScanResult>& blocks, const std::string& column,
                            const SvgOptions& opt) {
    if (blocks.empty()) throw std::invalid_argument("svg: no blocks to plot");
    std::vector<Series> series;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        Series s;
        s.label = b < opt.legend_labels.size() ? opt.legend_labels[b]
                                               : "series " + std::to_string(b);
        for (const ScanRow& r : blocks[b].rows) {
            bool ok = false;
            double v = base_column(r, column, ok);
            if (!ok) throw std::invalid_argument("svg: unknown column '" + column + "'");
            s.x.push_back(r.param_value);
            s.y.push_back(v);
        }
        series.push_back(std::move(s));
    }
    return render(series, with_x_label(opt, blocks.front().spec));
}

}  // namespace k3nu

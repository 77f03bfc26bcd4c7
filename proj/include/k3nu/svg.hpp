// Self-contained SVG line plots (no external resources, deterministic
// output: fixed viewport, fixed-precision coordinates).
#pragma once

#include <string>
#include <vector>

#include "k3nu/scan.hpp"

namespace k3nu {

struct SvgOptions {
    int width = 960;
    int height = 600;
    std::string x_label;  // defaults to the scanned parameter name
    std::string y_label;
    // Legend labels for emit_svg_family; when empty, blocks are labeled by
    // index. Ignored by the single-result emitters.
    std::vector<std::string> legend_labels;
};

// Column names accepted by the emitters below. ScanResult columns:
// k3_dirac, k3_majorana, delta_k3. CorrelationScanResult adds c21, c32,
// c31, dc21, dc32, dc31.
std::vector<std::string> svg_columns(const ScanResult& r);
std::vector<std::string> svg_columns(const CorrelationScanResult& r);

// One polyline per selected column against the scan parameter, linear axes
// with tick labels and a legend. Axis ranges are the exact data ranges (a
// constant column is padded so its line sits at mid-height). Throws
// std::invalid_argument for unknown columns or fewer than two rows.
std::string emit_svg(const ScanResult& r, const std::vector<std::string>& columns,
                     const SvgOptions& opt = {});
std::string emit_svg(const CorrelationScanResult& r, const std::vector<std::string>& columns,
                     const SvgOptions& opt = {});

// Family plot for 2D scans: one polyline of the selected column per outer
// block, legend entries labeled by the outer parameter value.
std::string emit_svg_family(const std::vector<ScanResult>& blocks, const std::string& column,
                            const SvgOptions& opt = {});

}  // namespace k3nu

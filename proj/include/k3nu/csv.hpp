// CSV emission with fixed formatting so identical runs are byte-identical.
#pragma once

#include <string>
#include <vector>

#include "k3nu/scan.hpp"

namespace k3nu {

inline constexpr const char* tool_version = "0.1.0";

// %.{precision}g rendering; precision 17 round-trips doubles exactly.
std::string format_double(double v, int precision);

// Header comment block (tool version, generator inputs, scan spec, argmax
// summaries) followed by
//   param,k3_dirac,k3_majorana,delta_k3,violated_dirac,violated_majorana
// and one data row per grid point. Metadata numbers use 17 significant
// digits so a run can be reproduced exactly from its own output.
std::string emit_csv(const ScanResult& r, int precision = 12);

// Same base columns plus c21,c32,c31,dc21,dc32,dc31.
std::string emit_csv(const CorrelationScanResult& r, int precision = 12);

// Outer-major concatenation with a "# outer ..." comment before each block.
std::string emit_csv_2d(const std::vector<ScanResult>& blocks, int precision = 12);

// Write via a temporary file in the same directory plus rename, so readers
// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace k3nu

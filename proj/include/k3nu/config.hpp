// INI-style run configuration.
//
// Sections: [physics], [kossakowski], [protocol], [scan], [output]. Angles
// accept a "pi" suffix (e.g. theta = 0.187pi). Unknown keys or sections are
// errors; every message carries the 1-based line number.
#pragma once

#include <stdexcept>
#include <string>

#include "k3nu/model.hpp"
#include "k3nu/scan.hpp"

namespace k3nu {

struct OutputConfig {
    std::string csv;      // empty -> stdout
    std::string svg;      // empty -> no plot
    int precision = 12;   // significant digits in CSV numbers (17 round-trips)
};

struct RunConfig {
    OscillationParams physics{};
    // Off-diagonal coefficients of the Kossakowski matrix as parsed; kept
    // symmetric by construction.
    KossakowskiCoefficients kossakowski{};
    double tau = 0.1;
    ScanParameter parameter = ScanParameter::phi;
    GridSpec grid{0.0, 2.0 * pi, 65};
    ScanMode mode = ScanMode::delta_k3;
    bool tau_envelope = false;
    OutputConfig output{};

    ScanSpec to_scan_spec() const;
};

class config_error : public std::runtime_error {
  public:
    config_error(const std::string& what, int line);
    int line() const { return line_; }

  private:
    int line_;
};

// Parse configuration text. Missing keys keep their defaults; after parsing
// the physics and Kossakowski blocks are validated (so e.g. a c12 exceeding
// its bound is rejected here, with the bound in the message).
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Apply a single "section.key=value" override (same grammar as file values)
// without re-validating; used for command-line overrides.
void apply_override(RunConfig& cfg, const std::string& assignment);

// The semantic checks parse_config runs after reading a file.
void validate_run_config(const RunConfig& cfg);

}  // namespace k3nu

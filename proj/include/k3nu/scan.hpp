// Deterministic parameter sweeps over the model/correlator stack.
//
// Grid points are generated as start + i*(stop - start)/(count - 1), i = 0
// .. count-1, and every row is computed independently of all others, so the
// parallel (OpenMP) and serial drivers produce bit-identical results.
#pragma once

#include <stdexcept>
#include <vector>

#include "k3nu/leggett_garg.hpp"
#include "k3nu/model.hpp"

namespace k3nu {

enum class ScanParameter { phi, v_cc, c12, tau, energy };
enum class ScanMode {
    k3_pair,   // evaluate both K3 columns at the base phi
    delta_k3,  // for non-phi parameters, envelope |delta K3| over a phi grid
};

const char* to_string(ScanParameter p);
const char* to_string(ScanMode m);

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    double point(int i) const;
    // Throws std::invalid_argument unless count >= 2 and start < stop.
    void validate() const;
};

// Optional time-envelope for delta_k3 scans: the discriminator oscillates in
// tau, so its size at a parameter point is better measured by the amplitude
// of the whole delta_k3(tau) curve than by one fixed tau. When enabled the
// row maximizes |delta K3| over tau = step*k, k = 1..count, in addition to
// the phi grid.
struct TauEnvelope {
    bool enabled = false;
    double step = 0.1;
    int count = 100;
};

struct ScanBase {
    OscillationParams params{};
    KossakowskiCoefficients kossakowski{};
    double tau = 0.1;
};

struct ScanSpec {
    ScanParameter parameter = ScanParameter::phi;
    GridSpec grid{};
    ScanBase base{};
    ScanMode mode = ScanMode::delta_k3;
    int phi_grid = 64;  // envelope resolution, phi_j = 2*pi*j/phi_grid
    TauEnvelope tau_envelope{};
};

struct ScanRow {
    double param_value = 0.0;
    double k3_dirac = 0.0;
    double k3_majorana = 0.0;
    double delta_k3 = 0.0;  // always k3_dirac - k3_majorana of this row
    bool violated_dirac = false;
    bool violated_majorana = false;
};

struct CorrelationRow : ScanRow {
    // Majorana-case correlators at the row's times, and their differences
    // from the phi = 0 evaluation.
    double c21 = 0.0, c32 = 0.0, c31 = 0.0;
    double dc21 = 0.0, dc32 = 0.0, dc31 = 0.0;
};

struct Argmax {
    double param_value = 0.0;
    double value = 0.0;
};

struct ScanResult {
    ScanSpec spec;
    std::vector<ScanRow> rows;
    Argmax argmax_abs_delta;  // row maximizing |delta_k3|; ties -> smallest param
    Argmax argmax_k3;         // row maximizing k3_majorana; ties -> smallest param
};

struct CorrelationScanResult {
    ScanSpec spec;
    std::vector<CorrelationRow> rows;
    Argmax argmax_abs_delta;
    Argmax argmax_k3;
};

// A row evaluation failed; param_value identifies the offending grid point.
// numeric() distinguishes numerical breakdown (non-finite intermediates)
// from input-validation failures such as a coefficient grid crossing its
// Kossakowski bound.
class scan_error : public std::runtime_error {
  public:
    scan_error(std::string what, double param_value, bool numeric = false);
    double param_value() const { return param_value_; }
    bool numeric() const { return numeric_; }

  private:
    double param_value_;
    bool numeric_;
};

ScanResult run_scan(const ScanSpec& spec);         // OpenMP over rows
ScanResult run_scan_serial(const ScanSpec& spec);  // reference implementation

// Outer-major row ordering: for each outer grid point the full inner scan is
// appended. The two parameters must be distinct.
std::vector<ScanResult> run_scan_2d(const ScanSpec& outer, const ScanSpec& inner);

CorrelationScanResult correlation_scan(const ScanSpec& spec);
CorrelationScanResult correlation_scan_serial(const ScanSpec& spec);

}  // namespace k3nu

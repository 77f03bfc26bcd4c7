#include "k3nu/scan.hpp"

#include <cmath>
#include <exception>
#include <sstream>
#include <utility>

namespace k3nu {

const char* to_string(ScanParameter p) {
    switch (p) {
        case ScanParameter::phi: return "phi";
        case ScanParameter::v_cc: return "v_cc";
        case ScanParameter::c12: return "c12";
        case ScanParameter::tau: return "tau";
        case ScanParameter::energy: return "energy";
    }
    return "?";
}

const char* to_string(ScanMode m) {
    return m == ScanMode::k3_pair ? "k3_pair" : "delta_k3";
}

double GridSpec::point(int i) const {
    return start + static_cast<double>(i) * (stop - start) / static_cast<double>(count - 1);
}

void GridSpec::validate() const {
    if (!(std::isfinite(start) && std::isfinite(stop)))
        throw std::invalid_argument("scan: non-finite grid endpoints");
    if (count < 2) throw std::invalid_argument("scan: grid count must be >= 2");
    if (!(start < stop)) throw std::invalid_argument("scan: grid requires start < stop");
}

scan_error::scan_error(std::string what, double param_value, bool numeric)
    : std::runtime_error(std::move(what)), param_value_(param_value), numeric_(numeric) {}

namespace {

struct RowInputs {
    OscillationParams params;
    KossakowskiCoefficients koss;
    double tau;
};

KossakowskiCoefficients with_c12(const KossakowskiCoefficients& c, double value) {
    return KossakowskiCoefficients::symmetric(c.at(1, 1), c.at(2, 2), c.at(3, 3), value,
                                              c.at(1, 3), c.at(2, 3));
}

RowInputs apply_parameter(const ScanBase& base, ScanParameter parameter, double value) {
    RowInputs in{base.params, base.kossakowski, base.tau};
    switch (parameter) {
        case ScanParameter::phi: in.params.phi = value; break;
        case ScanParameter::v_cc: in.params.v_cc = value; break;
        case ScanParameter::c12: in.koss = with_c12(base.kossakowski, value); break;
        case ScanParameter::tau: in.tau = value; break;
        case ScanParameter::energy: in.params.energy = value; break;
    }
    return in;
}

struct PairEval {
    K3Result dirac;
    K3Result majorana;
};

PairEval eval_pair(const RowInputs& in, double phi, double tau) {
    OscillationParams majorana = in.params;
    majorana.phi = phi;
    OscillationParams dirac = majorana;
    dirac.phi = 0.0;

    const TimeTriple times = TimeTriple::equally_spaced(tau);
    const BlochVector q0 = BlochVector::sigma_z();
    PairEval pe;
    pe.dirac = k3(build_effective_generator(dirac, in.koss), q0, times);
    pe.majorana = k3(build_effective_generator(majorana, in.koss), q0, times);
    return pe;
}

// Envelope search for delta_k3 scans over non-phi parameters: maximize
// |K3_dirac - K3_majorana| over the phi grid and, when enabled, the tau
// grid. Ties keep the first candidate in (tau, phi) loop order, so the
// result does not depend on evaluation strategy.
PairEval eval_row_pair(const ScanSpec& spec, const RowInputs& in) {
    const bool envelope =
        spec.mode == ScanMode::delta_k3 && spec.parameter != ScanParameter::phi;
    if (!envelope) return eval_pair(in, in.params.phi, in.tau);

    if (spec.phi_grid < 1) throw std::invalid_argument("scan: phi_grid must be >= 1");

    const int tau_count = spec.tau_envelope.enabled ? spec.tau_envelope.count : 1;
    double best_abs = -1.0;
    double best_phi = 0.0, best_tau = in.tau;

    const OscillationParams dirac_params = [&] {
        OscillationParams p = in.params;
        p.phi = 0.0;
        return p;
    }();
    const Generator4 g_dirac = build_effective_generator(dirac_params, in.koss);
    const BlochVector q0 = BlochVector::sigma_z();

    for (int kt = 0; kt < tau_count; ++kt) {
        const double tau = spec.tau_envelope.enabled
                               ? spec.tau_envelope.step * static_cast<double>(kt + 1)
                               : in.tau;
        const TimeTriple times = TimeTriple::equally_spaced(tau);
        const K3Result kd = k3(g_dirac, q0, times);
        for (int j = 0; j < spec.phi_grid; ++j) {
            const double phi = 2.0 * pi * static_cast<double>(j) / spec.phi_grid;
            OscillationParams mp = in.params;
            mp.phi = phi;
            const K3Result km = k3(build_effective_generator(mp, in.koss), q0, times);
            const double a = std::fabs(kd.k3 - km.k3);
            if (a > best_abs) {
                best_abs = a;
                best_phi = phi;
                best_tau = tau;
            }
        }
    }
    return eval_pair(in, best_phi, best_tau);
}

ScanRow finish_row(double value, const PairEval& pe) {
    ScanRow row;
    row.param_value = value;
    row.k3_dirac = pe.dirac.k3;
    row.k3_majorana = pe.majorana.k3;
    row.delta_k3 = pe.dirac.k3 - pe.majorana.k3;
    row.violated_dirac = pe.dirac.violated;
    row.violated_majorana = pe.majorana.violated;
    if (!std::isfinite(row.k3_dirac) || !std::isfinite(row.k3_majorana))
        throw scan_error("scan: non-finite K3 intermediate", value, true);
    return row;
}

// Failures coming out of the numeric kernel (as opposed to parameter or
// coefficient validation) are flagged so callers can map them to a distinct
// exit status.
bool is_numeric_failure(const std::exception& e) {
    const std::string what = e.what();
    return what.rfind("linalg4:", 0) == 0 || what.rfind("dynamics:", 0) == 0 ||
           what.rfind("leggett_garg:", 0) == 0;
}

ScanRow evaluate_row(const ScanSpec& spec, int i) {
    const double value = spec.grid.point(i);
    try {
        RowInputs in = apply_parameter(spec.base, spec.parameter, value);
        return finish_row(value, eval_row_pair(spec, in));
    } catch (const scan_error&) {
        throw;
    } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "scan: row at " << to_string(spec.parameter) << " = " << value
            << " failed: " << e.what();
        throw scan_error(msg.str(), value, is_numeric_failure(e));
    }
}

CorrelationRow evaluate_correlation_row(const ScanSpec& spec, int i) {
    const double value = spec.grid.point(i);
    try {
        RowInputs in = apply_parameter(spec.base, spec.parameter, value);
        PairEval pe = eval_row_pair(spec, in);
        CorrelationRow row;
        static_cast<ScanRow&>(row) = finish_row(value, pe);
        row.c21 = pe.majorana.c21;
        row.c32 = pe.majorana.c32;
        row.c31 = pe.majorana.c31;
        row.dc21 = pe.dirac.c21 - pe.majorana.c21;
        row.dc32 = pe.dirac.c32 - pe.majorana.c32;
        row.dc31 = pe.dirac.c31 - pe.majorana.c31;
        return row;
    } catch (const scan_error&) {
        throw;
    } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "scan: row at " << to_string(spec.parameter) << " = " << value
            << " failed: " << e.what();
        throw scan_error(msg.str(), value, is_numeric_failure(e));
    }
}

void check_spec(const ScanSpec& spec) {
    spec.grid.validate();
    spec.base.params.validate();
    if (!(spec.base.tau > 0.0)) throw std::invalid_argument("scan: base tau must be positive");
    if (spec.tau_envelope.enabled) {
        if (spec.parameter == ScanParameter::tau)
            throw std::invalid_argument("scan: tau envelope cannot combine with a tau scan");
        if (!(spec.tau_envelope.step > 0.0) || spec.tau_envelope.count < 1)
            throw std::invalid_argument("scan: invalid tau envelope grid");
    }
}

template <typename Row>
void fill_argmax(const std::vector<Row>& rows, Argmax& abs_delta, Argmax& best_k3) {
    abs_delta = {rows[0].param_value, rows[0].delta_k3};
    best_k3 = {rows[0].param_value, rows[0].k3_majorana};
    for (const Row& r : rows) {
        if (std::fabs(r.delta_k3) > std::fabs(abs_delta.value))
            abs_delta = {r.param_value, r.delta_k3};
        if (r.k3_majorana > best_k3.value) best_k3 = {r.param_value, r.k3_majorana};
    }
}

// Rows are filled by index; exceptions are captured per row and the lowest
// failing index is rethrown after the loop, so the abort is deterministic
// under any scheduling.
template <typename Row, typename Eval>
std::vector<Row> map_rows(const ScanSpec& spec, Eval eval, bool parallel) {
    const int n = spec.grid.count;
    std::vector<Row> rows(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            try {
                rows[static_cast<std::size_t>(i)] = eval(spec, i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            try {
                rows[static_cast<std::size_t>(i)] = eval(spec, i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }

    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return rows;
}

ScanResult run_scan_impl(const ScanSpec& spec, bool parallel) {
    check_spec(spec);
    ScanResult result;
    result.spec = spec;
    result.rows = map_rows<ScanRow>(spec, evaluate_row, parallel);
    fill_argmax(result.rows, result.argmax_abs_delta, result.argmax_k3);
    return result;
}

CorrelationScanResult correlation_scan_impl(const ScanSpec& spec, bool parallel) {
    check_spec(spec);
    CorrelationScanResult result;
    result.spec = spec;
    result.rows = map_rows<CorrelationRow>(spec, evaluate_correlation_row, parallel);
    fill_argmax(result.rows, result.argmax_abs_delta, result.argmax_k3);
    return result;
}

}  // namespace

ScanResult run_scan(const ScanSpec& spec) { return run_scan_impl(spec, true); }

ScanResult run_scan_serial(const ScanSpec& spec) { return run_scan_impl(spec, false); }

CorrelationScanResult correlation_scan(const ScanSpec& spec) {
    return correlation_scan_impl(spec, true);
}

CorrelationScanResult correlation_scan_serial(const ScanSpec& spec) {
    return correlation_scan_impl(spec, false);
}

std::vector<ScanResult> run_scan_2d(const ScanSpec& outer, const ScanSpec& inner) {
    if (outer.parameter == inner.parameter)
        throw std::invalid_argument("scan: 2d scan requires distinct parameters");
    outer.grid.validate();

    std::vector<ScanResult> blocks;
    blocks.reserve(static_cast<std::size_t>(outer.grid.count));
    for (int i = 0; i < outer.grid.count; ++i) {
        const double value = outer.grid.point(i);
        ScanSpec block = inner;
        RowInputs in = apply_parameter(inner.base, outer.parameter, value);
        block.base.params = in.params;
        block.base.kossakowski = in.koss;
        block.base.tau = in.tau;
        blocks.push_back(run_scan(block));
    }
    return blocks;
}

}  // namespace k3nu

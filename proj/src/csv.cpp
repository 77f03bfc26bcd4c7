#include "k3nu/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace k3nu {

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

namespace {

constexpr int meta_precision = 17;

std::string fmt_meta(double v) { return format_double(v, meta_precision); }

void emit_metadata(std::ostream& out, const ScanSpec& s, const Argmax& abs_delta,
                   const Argmax& best_k3) {
    const OscillationParams& p = s.base.params;
    const KossakowskiCoefficients& c = s.base.kossakowski;
    out << "# k3nu " << tool_version << "\n";
    out << "# physics: theta=" << fmt_meta(p.theta) << " dm2=" << fmt_meta(p.dm2)
        << " energy=" << fmt_meta(p.energy) << " v_cc=" << fmt_meta(p.v_cc)
        << " phi=" << fmt_meta(p.phi) << "\n";
    out << "# kossakowski: c11=" << fmt_meta(c.at(1, 1)) << " c22=" << fmt_meta(c.at(2, 2))
        << " c33=" << fmt_meta(c.at(3, 3)) << " c12=" << fmt_meta(c.at(1, 2))
        << " c13=" << fmt_meta(c.at(1, 3)) << " c23=" << fmt_meta(c.at(2, 3)) << "\n";
    out << "# protocol: tau=" << fmt_meta(s.base.tau) << "\n";
    out << "# scan: parameter=" << to_string(s.parameter) << " start=" << fmt_meta(s.grid.start)
        << " stop=" << fmt_meta(s.grid.stop) << " count=" << s.grid.count
        << " mode=" << to_string(s.mode);
    if (s.tau_envelope.enabled)
        out << " tau_envelope=" << fmt_meta(s.tau_envelope.step) << ":" << s.tau_envelope.count;
    out << "\n";
    if (s.mode == ScanMode::delta_k3 && s.parameter != ScanParameter::phi) {
        out << "# note: delta_k3 maximizes |K3(phi=0) - K3(phi)| over a " << s.phi_grid
            << "-point phi grid";
        if (s.tau_envelope.enabled) out << " and the tau grid above";
        out << "; k3 columns are taken at that argmax\n";
    }
    out << "# argmax_abs_delta: param=" << fmt_meta(abs_delta.param_value)
        << " value=" << fmt_meta(abs_delta.value) << "\n";
    out << "# argmax_k3: param=" << fmt_meta(best_k3.param_value)
        << " value=" << fmt_meta(best_k3.value) << "\n";
}

void emit_base_row(std::ostream& out, const ScanRow& r, int precision) {
    out << format_double(r.param_value, precision) << ','
        << format_double(r.k3_dirac, precision) << ','
        << format_double(r.k3_majorana, precision) << ','
        << format_double(r.delta_k3, precision) << ',' << (r.violated_dirac ? 1 : 0) << ','
        << (r.violated_majorana ? 1 : 0);
}

}  // namespace

std::string emit_csv(const ScanResult& r, int precision) {
    std::ostringstream out;
    emit_metadata(out, r.spec, r.argmax_abs_delta, r.argmax_k3);
    out << "param,k3_dirac,k3_majorana,delta_k3,violated_dirac,violated_majorana\n";
    for (const ScanRow& row : r.rows) {
        emit_base_row(out, row, precision);
        out << "\n";
    }
    return out.str();
}

std::string emit_csv(const CorrelationScanResult& r, int precision) {
    std::ostringstream out;
    emit_metadata(out, r.spec, r.argmax_abs_delta, r.argmax_k3);
    out << "param,k3_dirac,k3_majorana,delta_k3,violated_dirac,violated_majorana,"
           "c21,c32,c31,dc21,dc32,dc31\n";
    for (const CorrelationRow& row : r.rows) {
        emit_base_row(out, row, precision);
        out << ',' << format_double(row.c21, precision) << ','
            << format_double(row.c32, precision) << ',' << format_double(row.c31, precision)
            << ',' << format_double(row.dc21, precision) << ','
            << format_double(row.dc32, precision) << ',' << format_double(row.dc31, precision)
            << "\n";
    }
    return out.str();
}

std::string emit_csv_2d(const std::vector<ScanResult>& blocks, int precision) {
    std::ostringstream out;
    int i = 0;
    for (const ScanResult& block : blocks) {
        out << "# outer block " << i++ << " of " << blocks.size() << "\n";
        out << emit_csv(block, precision);
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace k3nu

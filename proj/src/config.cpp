#include "k3nu/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace k3nu {

config_error::config_error(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "config: line " + std::to_string(line) + ": " + what
                                  : "config: " + what),
      line_(line) {}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Plain floating literal, optionally with a "pi" suffix: "0.5pi" = pi/2,
// "pi" alone = pi.
double parse_number(const std::string& raw, int line) {
    std::string s = trim(raw);
    double mult = 1.0;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        mult = pi;
        s = trim(s.substr(0, s.size() - 2));
        if (s.empty()) return mult;
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw config_error("cannot parse number '" + raw + "'", line);
    return v * mult;
}

int parse_int(const std::string& raw, int line) {
    std::string s = trim(raw);
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        throw config_error("cannot parse integer '" + raw + "'", line);
    return static_cast<int>(v);
}

bool parse_bool(const std::string& raw, int line) {
    std::string s = trim(raw);
    if (s == "true" || s == "on" || s == "1") return true;
    if (s == "false" || s == "off" || s == "0") return false;
    throw config_error("cannot parse boolean '" + raw + "'", line);
}

ScanParameter parse_parameter(const std::string& raw, int line) {
    std::string s = trim(raw);
    if (s == "phi") return ScanParameter::phi;
    if (s == "v_cc") return ScanParameter::v_cc;
    if (s == "c12") return ScanParameter::c12;
    if (s == "tau") return ScanParameter::tau;
    if (s == "energy") return ScanParameter::energy;
    throw config_error("unknown scan parameter '" + raw + "'", line);
}

ScanMode parse_mode(const std::string& raw, int line) {
    std::string s = trim(raw);
    if (s == "k3_pair" || s == "k3-pair") return ScanMode::k3_pair;
    if (s == "delta_k3" || s == "delta-k3") return ScanMode::delta_k3;
    throw config_error("unknown scan mode '" + raw + "'", line);
}

struct KIndex {
    int i, j;
};

const std::map<std::string, KIndex>& kossakowski_keys() {
    static const std::map<std::string, KIndex> keys = {
        {"c11", {1, 1}}, {"c22", {2, 2}}, {"c33", {3, 3}},
        {"c12", {1, 2}}, {"c13", {1, 3}}, {"c23", {2, 3}},
    };
    return keys;
}

void set_kossakowski(RunConfig& cfg, const KIndex& idx, double v) {
    double c[3][3];
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) c[i - 1][j - 1] = cfg.kossakowski.at(i, j);
    c[idx.i - 1][idx.j - 1] = v;
    c[idx.j - 1][idx.i - 1] = v;
    cfg.kossakowski = KossakowskiCoefficients::symmetric(c[0][0], c[1][1], c[2][2], c[0][1],
                                                         c[0][2], c[1][2]);
}

void apply_key(RunConfig& cfg, const std::string& section, const std::string& key,
               const std::string& value, int line) {
    if (section == "physics") {
        if (key == "theta") cfg.physics.theta = parse_number(value, line);
        else if (key == "dm2") cfg.physics.dm2 = parse_number(value, line);
        else if (key == "energy") cfg.physics.energy = parse_number(value, line);
        else if (key == "v_cc") cfg.physics.v_cc = parse_number(value, line);
        else if (key == "phi") cfg.physics.phi = parse_number(value, line);
        else throw config_error("unknown key '" + key + "' in [physics]", line);
    } else if (section == "kossakowski") {
        auto it = kossakowski_keys().find(key);
        if (it == kossakowski_keys().end())
            throw config_error("unknown key '" + key + "' in [kossakowski]", line);
        set_kossakowski(cfg, it->second, parse_number(value, line));
    } else if (section == "protocol") {
        if (key == "tau") cfg.tau = parse_number(value, line);
        else throw config_error("unknown key '" + key + "' in [protocol]", line);
    } else if (section == "scan") {
        if (key == "parameter") cfg.parameter = parse_parameter(value, line);
        else if (key == "start") cfg.grid.start = parse_number(value, line);
        else if (key == "stop") cfg.grid.stop = parse_number(value, line);
        else if (key == "count") cfg.grid.count = parse_int(value, line);
        else if (key == "mode") cfg.mode = parse_mode(value, line);
        else if (key == "tau_envelope") cfg.tau_envelope = parse_bool(value, line);
        else throw config_error("unknown key '" + key + "' in [scan]", line);
    } else if (section == "output") {
        if (key == "csv") cfg.output.csv = trim(value);
        else if (key == "svg") cfg.output.svg = trim(value);
        else if (key == "precision") cfg.output.precision = parse_int(value, line);
        else throw config_error("unknown key '" + key + "' in [output]", line);
    } else {
        throw config_error("unknown section [" + section + "]", line);
    }
}

void validate_config(const RunConfig& cfg, const std::map<std::string, int>& key_lines) {
    auto line_of = [&](const std::string& key) {
        auto it = key_lines.find(key);
        return it == key_lines.end() ? 0 : it->second;
    };

    try {
        cfg.physics.validate();
    } catch (const std::exception& e) {
        throw config_error(e.what(), 0);
    }

    ValidationReport rep = validate_kossakowski(cfg.kossakowski);
    if (!rep.pass) {
        const auto& v = rep.violations.front();
        std::ostringstream msg;
        msg.precision(17);
        msg << "kossakowski coefficients rejected: |c" << v.i << v.j << "| = " << v.value
            << " exceeds its bound " << v.bound << " = (c" << v.i << v.i << " + c" << v.j
            << v.j << ")/2";
        std::string key = "c" + std::to_string(v.i) + std::to_string(v.j);
        throw config_error(msg.str(), line_of(key));
    }

    if (!(cfg.tau > 0.0) || !std::isfinite(cfg.tau))
        throw config_error("protocol tau must be positive", line_of("tau"));
    try {
        cfg.grid.validate();
    } catch (const std::exception& e) {
        throw config_error(e.what(), 0);
    }
    if (cfg.output.precision < 1 || cfg.output.precision > 17)
        throw config_error("output precision must be in 1..17", line_of("precision"));
    if (cfg.tau_envelope && cfg.parameter == ScanParameter::tau)
        throw config_error("tau_envelope cannot combine with a tau scan", 0);
}

}  // namespace

void apply_override(RunConfig& cfg, const std::string& assignment) {
    std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw config_error("override must look like section.key=value: '" + assignment + "'",
                           0);
    std::string path = trim(assignment.substr(0, eq));
    std::string value = trim(assignment.substr(eq + 1));
    std::size_t dot = path.find('.');
    if (dot == std::string::npos)
        throw config_error("override must look like section.key=value: '" + assignment + "'",
                           0);
    apply_key(cfg, trim(path.substr(0, dot)), trim(path.substr(dot + 1)), value, 0);
}

void validate_run_config(const RunConfig& cfg) { validate_config(cfg, {}); }

ScanSpec RunConfig::to_scan_spec() const {
    ScanSpec spec;
    spec.parameter = parameter;
    spec.grid = grid;
    spec.base.params = physics;
    spec.base.kossakowski = kossakowski;
    spec.base.tau = tau;
    spec.mode = mode;
    spec.phi_grid = 64;
    spec.tau_envelope.enabled = tau_envelope;
    return spec;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, int> key_lines;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw config_error("malformed section header", line);
            section = trim(s.substr(1, s.size() - 2));
            if (section != "physics" && section != "kossakowski" && section != "protocol" &&
                section != "scan" && section != "output")
                throw config_error("unknown section [" + section + "]", line);
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) throw config_error("expected 'key = value'", line);
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw config_error("empty key", line);
        if (section.empty()) throw config_error("key outside any section", line);
        apply_key(cfg, section, key, value, line);
        key_lines[key] = line;
    }
    validate_config(cfg, key_lines);
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace k3nu

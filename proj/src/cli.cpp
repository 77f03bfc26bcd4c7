#include "k3nu/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "k3nu/config.hpp"
#include "k3nu/csv.hpp"
#include "k3nu/svg.hpp"

namespace k3nu {

namespace {

struct CliOptions {
    std::string config_path;
    std::string grid;        // start:stop:count
    std::string mode;        // k3-pair | delta-k3
    std::string out_path;    // overrides [output] csv
    std::string svg_path;    // overrides [output] svg
    std::vector<std::string> svg_columns_opt;
    std::vector<std::string> overrides;  // section.key=value
    int precision = 0;  // 0 -> keep config value
    bool tau_envelope = false;
    bool serial = false;
    // scan-2d only
    std::string outer;
    std::string outer_grid;
};

GridSpec parse_grid_arg(const std::string& s) {
    GridSpec g;
    std::size_t a = s.find(':');
    std::size_t b = s.rfind(':');
    if (a == std::string::npos || b == a)
        throw config_error("grid must look like start:stop:count: '" + s + "'", 0);
    try {
        g.start = std::stod(s.substr(0, a));
        g.stop = std::stod(s.substr(a + 1, b - a - 1));
        g.count = std::stoi(s.substr(b + 1));
    } catch (const std::exception&) {
        throw config_error("grid must look like start:stop:count: '" + s + "'", 0);
    }
    return g;
}

ScanParameter parse_parameter_arg(const std::string& s) {
    if (s == "phi") return ScanParameter::phi;
    if (s == "v_cc" || s == "vcc") return ScanParameter::v_cc;
    if (s == "c12") return ScanParameter::c12;
    if (s == "tau") return ScanParameter::tau;
    if (s == "energy") return ScanParameter::energy;
    throw config_error("unknown parameter '" + s + "'", 0);
}

RunConfig assemble(const CliOptions& opt) {
    RunConfig cfg;
    if (!opt.config_path.empty()) cfg = load_config_file(opt.config_path);
    for (const std::string& ov : opt.overrides) apply_override(cfg, ov);
    if (!opt.grid.empty()) cfg.grid = parse_grid_arg(opt.grid);
    if (!opt.mode.empty()) {
        if (opt.mode == "k3-pair" || opt.mode == "k3_pair") cfg.mode = ScanMode::k3_pair;
        else if (opt.mode == "delta-k3" || opt.mode == "delta_k3")
            cfg.mode = ScanMode::delta_k3;
        else throw config_error("unknown mode '" + opt.mode + "'", 0);
    }
    if (opt.tau_envelope) cfg.tau_envelope = true;
    if (opt.precision != 0) cfg.output.precision = opt.precision;
    if (!opt.out_path.empty()) cfg.output.csv = opt.out_path;
    if (!opt.svg_path.empty()) cfg.output.svg = opt.svg_path;
    return cfg;
}

void deliver(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file_atomic(path, content);
}

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "configuration file");
    cmd->add_option("--grid", opt.grid, "grid as start:stop:count");
    cmd->add_option("--mode", opt.mode, "k3-pair or delta-k3");
    cmd->add_option("--out", opt.out_path, "CSV output path ('-' = stdout)");
    cmd->add_option("--svg", opt.svg_path, "SVG plot output path");
    cmd->add_option("--svg-columns", opt.svg_columns_opt, "columns to plot")
        ->delimiter(',');
    cmd->add_option("--set", opt.overrides, "override section.key=value")
        ->take_all();
    cmd->add_option("--precision", opt.precision, "CSV significant digits (1..17)");
    cmd->add_flag("--tau-envelope", opt.tau_envelope,
                  "maximize |delta K3| over a tau grid as well");
    cmd->add_flag("--serial", opt.serial, "use the serial scan driver");
}

int do_validate(const CliOptions& opt) {
    RunConfig cfg = assemble(opt);
    ValidationReport rep = validate_kossakowski(cfg.kossakowski);
    // parse/assemble already rejects failing coefficients, but --set can in
    // principle be extended; report faithfully either way.
    if (!rep.pass) {
        const auto& v = rep.violations.front();
        std::cout << "Kossakowski: fail: |c" << v.i << v.j << "| = " << v.value << " > "
                  << v.bound << " = (c" << v.i << v.i << " + c" << v.j << v.j << ")/2\n";
        return 2;
    }
    std::cout << "Kossakowski: pass" << (rep.boundary ? " (boundary)" : "") << "\n";
    std::cout << "PSD advisory: " << (rep.positive_semidefinite ? "satisfied" : "not satisfied")
              << "\n";
    return 0;
}

int do_scan(const CliOptions& opt, ScanParameter parameter, bool has_parameter) {
    RunConfig cfg = assemble(opt);
    if (has_parameter) cfg.parameter = parameter;
    validate_run_config(cfg);
    ScanSpec spec = cfg.to_scan_spec();

    ScanResult result = opt.serial ? run_scan_serial(spec) : run_scan(spec);
    deliver(cfg.output.csv, emit_csv(result, cfg.output.precision));
    if (!cfg.output.svg.empty()) {
        std::vector<std::string> cols = opt.svg_columns_opt;
        if (cols.empty()) cols = {"delta_k3"};
        write_file_atomic(cfg.output.svg, emit_svg(result, cols));
    }
    return 0;
}

int do_correlators(const CliOptions& opt, const std::string& parameter_arg) {
    RunConfig cfg = assemble(opt);
    if (!parameter_arg.empty()) cfg.parameter = parse_parameter_arg(parameter_arg);
    validate_run_config(cfg);
    ScanSpec spec = cfg.to_scan_spec();

    CorrelationScanResult result =
        opt.serial ? correlation_scan_serial(spec) : correlation_scan(spec);
    deliver(cfg.output.csv, emit_csv(result, cfg.output.precision));
    if (!cfg.output.svg.empty()) {
        std::vector<std::string> cols = opt.svg_columns_opt;
        if (cols.empty()) cols = {"c21", "c32", "c31"};
        write_file_atomic(cfg.output.svg, emit_svg(result, cols));
    }
    return 0;
}

int do_scan_2d(const CliOptions& opt) {
    if (opt.outer.empty() || opt.outer_grid.empty())
        throw config_error("scan-2d requires --outer and --outer-grid", 0);
    RunConfig cfg = assemble(opt);
    validate_run_config(cfg);

    ScanSpec inner = cfg.to_scan_spec();
    ScanSpec outer = inner;
    outer.parameter = parse_parameter_arg(opt.outer);
    outer.grid = parse_grid_arg(opt.outer_grid);
    outer.grid.validate();

    std::vector<ScanResult> blocks = run_scan_2d(outer, inner);
    deliver(cfg.output.csv, emit_csv_2d(blocks, cfg.output.precision));
    if (!cfg.output.svg.empty()) {
        std::string column =
            opt.svg_columns_opt.empty() ? "delta_k3" : opt.svg_columns_opt.front();
        SvgOptions svg_opt;
        for (int i = 0; i < outer.grid.count; ++i)
            svg_opt.legend_labels.push_back(std::string(to_string(outer.parameter)) + " = " +
                                            format_double(outer.grid.point(i), 6));
        write_file_atomic(cfg.output.svg, emit_svg_family(blocks, column, svg_opt));
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Leggett-Garg K3 correlators and the Dirac-Majorana discriminator\n"
                 "for dissipative two-flavor neutrino oscillations in matter"};
    app.set_version_flag("--version", std::string("k3nu ") + tool_version);
    app.require_subcommand(1);

    CliOptions opt;
    std::string correlator_parameter;

    CLI::App* validate = app.add_subcommand("validate", "check Kossakowski coefficients");
    add_common_options(validate, opt);

    struct Sub {
        const char* name;
        const char* help;
        ScanParameter parameter;
    };
    const Sub subs[] = {
        {"scan-phi", "sweep the Majorana phase", ScanParameter::phi},
        {"scan-vcc", "sweep the matter potential", ScanParameter::v_cc},
        {"scan-coupling", "sweep the c12 Kossakowski coefficient", ScanParameter::c12},
        {"scan-tau", "sweep the measurement spacing tau", ScanParameter::tau},
        {"scan-energy", "sweep the neutrino energy", ScanParameter::energy},
    };
    std::vector<CLI::App*> scan_cmds;
    for (const Sub& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common_options(cmd, opt);
        scan_cmds.push_back(cmd);
    }

    CLI::App* correlators =
        app.add_subcommand("correlators", "emit per-pair correlators along a scan");
    add_common_options(correlators, opt);
    correlators->add_option("--parameter", correlator_parameter,
                            "scanned parameter (phi, v_cc, c12, tau, energy)");

    CLI::App* scan2d = app.add_subcommand("scan-2d", "nested two-parameter sweep");
    add_common_options(scan2d, opt);
    scan2d->add_option("--outer", opt.outer, "outer parameter name")->required();
    scan2d->add_option("--outer-grid", opt.outer_grid, "outer grid start:stop:count")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return do_validate(opt);
        for (std::size_t i = 0; i < scan_cmds.size(); ++i)
            if (scan_cmds[i]->parsed()) return do_scan(opt, subs[i].parameter, true);
        if (correlators->parsed()) return do_correlators(opt, correlator_parameter);
        if (scan2d->parsed()) return do_scan_2d(opt);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rejected_coefficients& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const scan_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.numeric() ? 3 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("k3nu");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace k3nu

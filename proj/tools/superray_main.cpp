// Command-line front end: permittivities, reflection amplitudes, f(omega),
// pole location, parameter sweeps and the validation suite.
//
// Exit codes: 0 success, 1 usage/config error, 2 domain or convergence
// error, 3 validation-suite failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superray/config.hpp"
#include "superray/constants.hpp"
#include "superray/errors.hpp"
#include "superray/poles.hpp"
#include "superray/scattering.hpp"
#include "superray/sweep.hpp"
#include "superray/validation.hpp"

namespace {

using namespace superray;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string fmt(double v) { return format_double(v); }

// Frequency selection shared by the point commands: either the band offset
// directly (--omega-x) or an absolute photon energy (--omega-ev together
// with --omega-tilde-ev). Mixing the two is a usage error.
struct FrequencyArgs {
    std::optional<double> omega_x;
    std::optional<double> omega_ev;
    std::optional<double> omega_tilde_ev;

    void attach(CLI::App* cmd) {
        cmd->add_option("--omega-x", omega_x, "band offset x = omega/omega_tilde - 1");
        cmd->add_option("--omega-ev", omega_ev, "photon energy in eV (needs --omega-tilde-ev)");
        cmd->add_option("--omega-tilde-ev", omega_tilde_ev, "band edge in eV");
    }

    double resolve_x() const {
        if (omega_x && omega_ev) {
            throw UsageError("--omega-x and --omega-ev are mutually exclusive");
        }
        if (omega_x) return *omega_x;
        if (omega_ev) {
            if (!omega_tilde_ev) {
                throw UsageError("--omega-ev requires --omega-tilde-ev");
            }
            return *omega_ev / *omega_tilde_ev - 1.0;
        }
        throw UsageError("specify a frequency with --omega-x or --omega-ev");
    }
};

struct OutputTarget {
    std::string path;
    std::ofstream file;

    std::ostream& open() {
        if (path.empty()) return std::cout;
        file.open(path, std::ios::binary);
        if (!file) throw UsageError("cannot open output file '" + path + "'");
        return file;
    }
};

void warn_regime(const WeakShockPair& pair, double v) {
    if (!pair.weak_regime()) {
        std::cerr << "warning: delta = " << fmt(pair.delta)
                  << " lies outside the weak-shock regime (delta <= 0.1)\n";
    }
    if (v >= 0.01) {
        std::cerr << "warning: v = " << fmt(v)
                  << " strains the first-order O(v/c) expansion (v < 0.01)\n";
    }
}

unsigned threads_from_env() {
    const char* raw = std::getenv("SUPERRAY_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0) {
        throw UsageError("SUPERRAY_THREADS must be a non-negative integer");
    }
    return static_cast<unsigned>(value);
}

std::vector<double> parse_cli_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": cannot parse number from '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

const char* method_name(AmplitudeMethod m) {
    switch (m) {
        case AmplitudeMethod::full: return "full";
        case AmplitudeMethod::first_order: return "first_order";
        case AmplitudeMethod::oracle: return "oracle";
    }
    return "?";
}

void print_solution(std::ostream& out, const ReflectionSolution& sol) {
    out << "method = " << method_name(sol.method) << "\n"
        << "r = " << fmt(sol.r) << "\n"
        << "t = " << fmt(sol.t) << "\n"
        << "denominator = " << fmt(sol.denominator) << "\n"
        << "near_pole = " << (sol.near_pole ? "true" : "false") << "\n"
        << "omega = " << fmt(sol.triple.omega) << "\n"
        << "omega_reflected = " << fmt(sol.triple.omega_tilde_r) << "\n"
        << "omega_transmitted = " << fmt(sol.triple.omega_2) << "\n";
}

int run_epsilon(double a, double delta, const FrequencyArgs& freq, OutputTarget& target) {
    const double x = freq.resolve_x();
    const WeakShockPair pair(a, 1.0, delta);
    const InterfaceScattering exact(PlasmaPair{pair.exact_side1(), pair.exact_side2()}, 0.0);
    std::ostream& out = target.open();
    out << "x = " << fmt(x) << "\n"
        << "eps1_linearized = " << fmt(pair.epsilon1_at_x(x)) << "\n"
        << "eps2_linearized = " << fmt(pair.epsilon2_at_x(x)) << "\n"
        << "eps1_exact = " << fmt(exact.eps1_at_x(x)) << "\n"
        << "eps2_exact = " << fmt(exact.eps2_at_x(x)) << "\n"
        << "omega_depsilon_domega = " << fmt(2.0 * a * (1.0 + x)) << "\n";
    return 0;
}

int run_reflect(double a, double delta, double v, const std::string& method,
                const FrequencyArgs& freq, OutputTarget& target) {
    const WeakShockPair pair(a, 1.0, delta);
    warn_regime(pair, v);
    const InterfaceScattering sc(pair, v);
    const double x = freq.resolve_x();

    ReflectionSolution sol{};
    if (method == "full") {
        sol = reflection_full_at_x(sc, x);
    } else if (method == "first-order" || method == "first_order") {
        sol = reflection_first_order_at_x(sc, x);
    } else if (method == "oracle") {
        sol = boundary_solve_oracle_at_x(sc, x);
    } else {
        throw UsageError("--method must be full, first-order or oracle");
    }
    print_solution(target.open(), sol);
    return 0;
}

int run_fdenom(double a, double delta, double v, const FrequencyArgs& freq,
               std::optional<double> x_lo, std::optional<double> x_hi, int x_points,
               OutputTarget& target) {
    const WeakShockPair pair(a, 1.0, delta);
    warn_regime(pair, v);
    const InterfaceScattering sc(pair, v);

    if (x_lo || x_hi) {
        if (!x_lo || !x_hi) throw UsageError("--x-lo and --x-hi must be given together");
        if (!(*x_lo > 0.0 && *x_hi > *x_lo)) {
            throw UsageError("need 0 < --x-lo < --x-hi");
        }
        const GridRange grid{*x_lo, *x_hi, x_points, Spacing::log};
        std::ostream& out = target.open();
        for (double x : grid.values()) {
            out << fmt(x) << ' ' << fmt(f_denominator_at_x(sc, x)) << '\n';
        }
        return 0;
    }

    const double x = freq.resolve_x();
    target.open() << "f = " << fmt(f_denominator_at_x(sc, x)) << "\n";
    return 0;
}

int run_pole(double a, double delta, double v, double rel_tol,
             std::optional<double> omega_tilde_ev, OutputTarget& target) {
    const WeakShockPair pair(a, 1.0, delta);
    warn_regime(pair, v);
    const InterfaceScattering sc(pair, v);
    const PoleSearch search = find_pole(sc, rel_tol);

    std::ostream& out = target.open();
    if (!search.found()) {
        out << "status = no_pole\n"
            << "reason = " << search.no_pole_reason << "\n";
        return 0;
    }
    const PoleRecord& rec = *search.record;
    out << "status = pole\n"
        << "x_offset = " << fmt(rec.x_offset) << "\n"
        << "omega_star = " << fmt(rec.omega_star) << " (units of omega_tilde)\n";
    if (omega_tilde_ev) {
        out << "pole_energy_ev = " << fmt(*omega_tilde_ev * (1.0 + rec.x_offset)) << "\n";
    }
    out << "f_residual = " << fmt(rec.f_residual) << "\n"
        << "iterations = " << rec.iterations << "\n"
        << "bracket = [" << fmt(rec.bracket.x_lo) << ", " << fmt(rec.bracket.x_hi) << "]\n"
        << "asymptotic_a_v2_over_2 = " << fmt(rec.asymptotic_prediction) << "\n"
        << "ratio_to_asymptotic = " << fmt(rec.x_offset / rec.asymptotic_prediction) << "\n";
    return 0;
}

int run_validate(OutputTarget& target) {
    std::ostream& out = target.open();
    bool all_ok = true;
    for (const CheckResult& check : run_validation_suite()) {
        out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
            << "\n";
        all_ok = all_ok && check.passed;
    }
    return all_ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"superradiant reflection at a moving shock front"};
    app.require_subcommand(1);

    // epsilon -----------------------------------------------------------
    auto* cmd_eps = app.add_subcommand("epsilon", "evaluate the permittivity models");
    double eps_a = 1.0, eps_delta = 1e-3;
    FrequencyArgs eps_freq;
    OutputTarget eps_out;
    cmd_eps->add_option("--a", eps_a, "background constant a");
    cmd_eps->add_option("--delta", eps_delta, "density jump dn/n");
    eps_freq.attach(cmd_eps);
    cmd_eps->add_option("--out", eps_out.path, "write results to a file");

    // reflect -----------------------------------------------------------
    auto* cmd_ref = app.add_subcommand("reflect", "reflection/transmission amplitudes");
    double ref_a = 1.0, ref_delta = 1e-3, ref_v = 0.0;
    std::string ref_method = "full";
    FrequencyArgs ref_freq;
    OutputTarget ref_out;
    cmd_ref->add_option("--a", ref_a, "background constant a");
    cmd_ref->add_option("--delta", ref_delta, "density jump dn/n");
    cmd_ref->add_option("--v", ref_v, "front speed, fraction of c");
    cmd_ref->add_option("--method", ref_method, "full | first-order | oracle");
    ref_freq.attach(cmd_ref);
    cmd_ref->add_option("--out", ref_out.path, "write results to a file");

    // fdenom ------------------------------------------------------------
    auto* cmd_fd = app.add_subcommand("fdenom", "denominator f of the expanded amplitude");
    double fd_a = 1.0, fd_delta = 1e-3, fd_v = 1e-5;
    FrequencyArgs fd_freq;
    std::optional<double> fd_xlo, fd_xhi;
    int fd_points = 200;
    OutputTarget fd_out;
    cmd_fd->add_option("--a", fd_a, "background constant a");
    cmd_fd->add_option("--delta", fd_delta, "density jump dn/n");
    cmd_fd->add_option("--v", fd_v, "front speed, fraction of c");
    fd_freq.attach(cmd_fd);
    cmd_fd->add_option("--x-lo", fd_xlo, "grid start for plot data (band offset)");
    cmd_fd->add_option("--x-hi", fd_xhi, "grid end for plot data (band offset)");
    cmd_fd->add_option("--x-points", fd_points, "grid points for plot data");
    cmd_fd->add_option("--out,--plot-data", fd_out.path, "write values / plot columns to a file");

    // pole ---------------------------------------------------------------
    auto* cmd_pole = app.add_subcommand("pole", "locate the root of f in the band");
    double pole_a = 1.0, pole_delta = 1e-3, pole_v = 1e-5, pole_tol = 1e-12;
    std::optional<double> pole_tilde_ev;
    OutputTarget pole_out;
    cmd_pole->add_option("--a", pole_a, "background constant a");
    cmd_pole->add_option("--delta", pole_delta, "density jump dn/n");
    cmd_pole->add_option("--v", pole_v, "front speed, fraction of c");
    cmd_pole->add_option("--rel-tol", pole_tol, "relative width of the final bracket");
    cmd_pole->add_option("--omega-tilde-ev", pole_tilde_ev, "band edge in eV for energy output");
    cmd_pole->add_option("--out", pole_out.path, "write results to a file");

    // sweep ---------------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand("sweep", "parameter sweep to CSV/JSON");
    std::string sweep_config_path;
    std::optional<double> sw_vlo, sw_vhi, sw_dlo, sw_dhi, sw_reltol;
    std::optional<int> sw_vpoints, sw_dpoints;
    std::optional<std::string> sw_vspacing, sw_dspacing, sw_a, sw_ev, sw_ne, sw_format;
    OutputTarget sweep_out;
    cmd_sweep->add_option("--config", sweep_config_path, "config file (key = value lines)");
    cmd_sweep->add_option("--v-lo", sw_vlo, "override v_lo");
    cmd_sweep->add_option("--v-hi", sw_vhi, "override v_hi");
    cmd_sweep->add_option("--v-points", sw_vpoints, "override v_points");
    cmd_sweep->add_option("--v-spacing", sw_vspacing, "override v_spacing (linear|log)");
    cmd_sweep->add_option("--delta-lo", sw_dlo, "override delta_lo");
    cmd_sweep->add_option("--delta-hi", sw_dhi, "override delta_hi");
    cmd_sweep->add_option("--delta-points", sw_dpoints, "override delta_points");
    cmd_sweep->add_option("--delta-spacing", sw_dspacing, "override delta_spacing (linear|log)");
    cmd_sweep->add_option("--a", sw_a, "override a list (comma separated)");
    cmd_sweep->add_option("--omega-tilde-ev", sw_ev, "override omega_tilde_ev list");
    cmd_sweep->add_option("--n-e-cm3", sw_ne, "override n_e_cm3 list");
    cmd_sweep->add_option("--rel-tol", sw_reltol, "override rel_tol");
    cmd_sweep->add_option("--format", sw_format, "override output format (csv|json)");
    cmd_sweep->add_option("--out", sweep_out.path, "write rows to a file");

    // validate ------------------------------------------------------------
    auto* cmd_val = app.add_subcommand("validate", "run the cross-module oracle suites");
    OutputTarget val_out;
    cmd_val->add_option("--out", val_out.path, "write results to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_eps->parsed()) return run_epsilon(eps_a, eps_delta, eps_freq, eps_out);
        if (cmd_ref->parsed()) {
            return run_reflect(ref_a, ref_delta, ref_v, ref_method, ref_freq, ref_out);
        }
        if (cmd_fd->parsed()) {
            return run_fdenom(fd_a, fd_delta, fd_v, fd_freq, fd_xlo, fd_xhi, fd_points, fd_out);
        }
        if (cmd_pole->parsed()) {
            return run_pole(pole_a, pole_delta, pole_v, pole_tol, pole_tilde_ev, pole_out);
        }
        if (cmd_sweep->parsed()) {
            SweepConfig config;
            if (!sweep_config_path.empty()) config = load_config(sweep_config_path);
            if (sw_vlo) config.v_range.lo = *sw_vlo;
            if (sw_vhi) config.v_range.hi = *sw_vhi;
            if (sw_vpoints) config.v_range.points = *sw_vpoints;
            if (sw_vspacing) {
                if (*sw_vspacing == "linear") config.v_range.spacing = Spacing::linear;
                else if (*sw_vspacing == "log") config.v_range.spacing = Spacing::log;
                else throw UsageError("--v-spacing must be linear or log");
            }
            if (sw_dlo) config.delta_range.lo = *sw_dlo;
            if (sw_dhi) config.delta_range.hi = *sw_dhi;
            if (sw_dpoints) config.delta_range.points = *sw_dpoints;
            if (sw_dspacing) {
                if (*sw_dspacing == "linear") config.delta_range.spacing = Spacing::linear;
                else if (*sw_dspacing == "log") config.delta_range.spacing = Spacing::log;
                else throw UsageError("--delta-spacing must be linear or log");
            }
            if (sw_a) config.a_values = parse_cli_list(*sw_a, "--a");
            if (sw_ev) {
                config.omega_tilde_ev_values = parse_cli_list(*sw_ev, "--omega-tilde-ev");
                config.n_e_values.clear();
            }
            if (sw_ne) {
                config.n_e_values = parse_cli_list(*sw_ne, "--n-e-cm3");
                if (!sw_ev) config.omega_tilde_ev_values.clear();
            }
            if (sw_reltol) config.rel_tol = *sw_reltol;
            if (sw_format) {
                if (*sw_format == "csv") config.format = OutputFormat::csv;
                else if (*sw_format == "json") config.format = OutputFormat::json;
                else throw UsageError("--format must be csv or json");
            }
            config.validate();

            const auto rows = run_sweep(config, threads_from_env());
            std::ostream& out = sweep_out.open();
            if (config.format == OutputFormat::csv) write_csv(out, rows);
            else write_json(out, rows);
            return 0;
        }
        if (cmd_val->parsed()) return run_validate(val_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

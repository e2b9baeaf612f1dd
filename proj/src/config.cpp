#include "superray/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "superray/errors.hpp"

namespace superray {

namespace {

const std::set<std::string> kSections = {"v", "delta", "media", "solver", "output"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view token, const std::string& source, int line,
                    const std::string& key) {
    token = trim(token);
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        parse_fail(source, line, "key '" + key + "': cannot parse number from '" +
                                     std::string(token) + "'");
    }
    return value;
}

std::vector<double> parse_list(std::string_view token, const std::string& source, int line,
                               const std::string& key) {
    std::vector<double> out;
    std::size_t start = 0;
    const std::string text(token);
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_number(item, source, line, key));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int parse_int(std::string_view token, const std::string& source, int line,
              const std::string& key) {
    const double value = parse_number(token, source, line, key);
    const int i = static_cast<int>(value);
    if (static_cast<double>(i) != value) {
        parse_fail(source, line, "key '" + key + "': expected an integer");
    }
    return i;
}

Spacing parse_spacing(std::string_view token, const std::string& source, int line,
                      const std::string& key) {
    const std::string_view t = trim(token);
    if (t == "linear") return Spacing::linear;
    if (t == "log") return Spacing::log;
    parse_fail(source, line, "key '" + key + "': expected 'linear' or 'log'");
}

} // namespace

SweepConfig parse_config(const std::string& text, const std::string& source_name) {
    SweepConfig config;
    bool ev_given = false;
    bool ne_given = false;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = trim(line.substr(0, hash));
        }
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') parse_fail(source_name, line_no, "unterminated section header");
            const std::string section(trim(line.substr(1, line.size() - 2)));
            if (!kSections.contains(section)) {
                parse_fail(source_name, line_no, "unknown section '[" + section + "]'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            parse_fail(source_name, line_no, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "v_lo") config.v_range.lo = parse_number(value, source_name, line_no, key);
        else if (key == "v_hi") config.v_range.hi = parse_number(value, source_name, line_no, key);
        else if (key == "v_points") config.v_range.points = parse_int(value, source_name, line_no, key);
        else if (key == "v_spacing") config.v_range.spacing = parse_spacing(value, source_name, line_no, key);
        else if (key == "delta_lo") config.delta_range.lo = parse_number(value, source_name, line_no, key);
        else if (key == "delta_hi") config.delta_range.hi = parse_number(value, source_name, line_no, key);
        else if (key == "delta_points") config.delta_range.points = parse_int(value, source_name, line_no, key);
        else if (key == "delta_spacing") config.delta_range.spacing = parse_spacing(value, source_name, line_no, key);
        else if (key == "a") config.a_values = parse_list(value, source_name, line_no, key);
        else if (key == "omega_tilde_ev") {
            config.omega_tilde_ev_values = parse_list(value, source_name, line_no, key);
            ev_given = true;
        } else if (key == "n_e_cm3") {
            config.n_e_values = parse_list(value, source_name, line_no, key);
            ne_given = true;
        } else if (key == "rel_tol") {
            config.rel_tol = parse_number(value, source_name, line_no, key);
        } else if (key == "format") {
            const std::string_view f = trim(value);
            if (f == "csv") config.format = OutputFormat::csv;
            else if (f == "json") config.format = OutputFormat::json;
            else parse_fail(source_name, line_no, "key 'format': expected 'csv' or 'json'");
        } else {
            parse_fail(source_name, line_no, "unknown key '" + key + "'");
        }
    }

    // Giving densities switches the energy axis off its eV default.
    if (ne_given && !ev_given) config.omega_tilde_ev_values.clear();

    config.validate();
    return config;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

namespace {

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_double(values[i]);
    }
    return out;
}

const char* spacing_name(Spacing s) { return s == Spacing::linear ? "linear" : "log"; }

} // namespace

std::string dump_config(const SweepConfig& config) {
    std::ostringstream out;
    out << "[v]\n"
        << "v_lo = " << format_double(config.v_range.lo) << "\n"
        << "v_hi = " << format_double(config.v_range.hi) << "\n"
        << "v_points = " << config.v_range.points << "\n"
        << "v_spacing = " << spacing_name(config.v_range.spacing) << "\n\n"
        << "[delta]\n"
        << "delta_lo = " << format_double(config.delta_range.lo) << "\n"
        << "delta_hi = " << format_double(config.delta_range.hi) << "\n"
        << "delta_points = " << config.delta_range.points << "\n"
        << "delta_spacing = " << spacing_name(config.delta_range.spacing) << "\n\n"
        << "[media]\n"
        << "a = " << join(config.a_values) << "\n";
    if (!config.omega_tilde_ev_values.empty()) {
        out << "omega_tilde_ev = " << join(config.omega_tilde_ev_values) << "\n";
    }
    if (!config.n_e_values.empty()) {
        out << "n_e_cm3 = " << join(config.n_e_values) << "\n";
    }
    out << "\n[solver]\n"
        << "rel_tol = " << format_double(config.rel_tol) << "\n\n"
        << "[output]\n"
        << "format = " << (config.format == OutputFormat::csv ? "csv" : "json") << "\n";
    return out.str();
}

} // namespace superray

#include "superray/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "superray/constants.hpp"
#include "superray/errors.hpp"

namespace superray {

std::vector<double> GridRange::values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < points; ++i) {
        if (i == 0) {
            out.push_back(lo);
        } else if (i == points - 1) {
            out.push_back(hi);
        } else if (spacing == Spacing::linear) {
            out.push_back(lo + (hi - lo) * i / (points - 1));
        } else {
            out.push_back(lo * std::exp(std::log(hi / lo) * i / (points - 1)));
        }
    }
    return out;
}

namespace {

void fail(const std::string& key, const std::string& what) {
    throw ConfigError("invalid config value for '" + key + "': " + what);
}

void check_range(const GridRange& g, const std::string& prefix, double min_lo, double max_hi) {
    if (!(g.lo >= min_lo)) fail(prefix + "_lo", "must be >= " + format_double(min_lo));
    if (!(g.hi <= max_hi)) fail(prefix + "_hi", "must be <= " + format_double(max_hi));
    if (!(g.lo <= g.hi)) fail(prefix + "_lo", "must be <= " + prefix + "_hi");
    if (g.points < 1) fail(prefix + "_points", "must be >= 1");
    if (g.spacing == Spacing::log && !(g.lo > 0.0)) {
        fail(prefix + "_spacing", "log spacing requires " + prefix + "_lo > 0");
    }
}

} // namespace

void SweepConfig::validate() const {
    check_range(v_range, "v", 0.0, 0.01);
    check_range(delta_range, "delta", 1e-6, 0.1);
    if (a_values.empty()) fail("a", "at least one value required");
    for (double a : a_values) {
        if (!(a > 0.0)) fail("a", "values must be > 0");
    }
    const bool have_ev = !omega_tilde_ev_values.empty();
    const bool have_ne = !n_e_values.empty();
    if (have_ev && have_ne) {
        fail("omega_tilde_ev", "mutually exclusive with n_e_cm3");
    }
    if (!have_ev && !have_ne) {
        fail("omega_tilde_ev", "one of omega_tilde_ev or n_e_cm3 is required");
    }
    for (double e : omega_tilde_ev_values) {
        if (!(e > 0.0)) fail("omega_tilde_ev", "values must be > 0");
    }
    for (double n : n_e_values) {
        if (!(n > 0.0)) fail("n_e_cm3", "values must be > 0");
    }
    if (!(rel_tol >= 1e-15)) fail("rel_tol", "must be >= 1e-15");
}

double emitted_energy_estimate(double n_e_cm3, double a) {
    if (!(n_e_cm3 > 0.0)) throw std::domain_error("emitted_energy_estimate: n_e must be > 0");
    if (!(a > 0.0)) throw std::domain_error("emitted_energy_estimate: a must be > 0");
    return omega_to_ev(plasma_frequency(n_e_cm3)) / std::sqrt(a);
}

namespace {

struct GridPoint {
    double v;
    double delta;
    double a;
    double scale; // omega_tilde in eV, or n_e in cm^-3
};

SpectrumRow evaluate_point(const GridPoint& p, bool scale_is_density, double rel_tol) {
    SpectrumRow row{};
    row.v = p.v;
    row.delta = p.delta;
    row.a = p.a;
    if (scale_is_density) {
        row.n_e_cm3 = p.scale;
        row.omega_tilde_ev = emitted_energy_estimate(p.scale, p.a);
    } else {
        row.omega_tilde_ev = p.scale;
    }

    // The core is dimensionless: omega_tilde = 1, everything in x.
    const WeakShockPair pair(p.a, 1.0, p.delta);
    const InterfaceScattering scatter(pair, p.v);
    const PoleSearch search = find_pole(scatter, rel_tol);
    if (search.found()) {
        row.status = PoleStatus::pole;
        row.x_offset = search.record->x_offset;
        row.pole_energy_ev = row.omega_tilde_ev * (1.0 + search.record->x_offset);
        row.f_residual = search.record->f_residual;
    } else {
        row.status = PoleStatus::no_pole;
    }
    return row;
}

} // namespace

std::vector<SpectrumRow> run_sweep(const SweepConfig& config, unsigned threads) {
    config.validate();

    const bool scale_is_density = !config.n_e_values.empty();
    auto a_values = config.a_values;
    auto scales = scale_is_density ? config.n_e_values : config.omega_tilde_ev_values;
    std::sort(a_values.begin(), a_values.end());
    std::sort(scales.begin(), scales.end());

    std::vector<GridPoint> points;
    for (double v : config.v_range.values())
        for (double delta : config.delta_range.values())
            for (double a : a_values)
                for (double s : scales) points.push_back({v, delta, a, s});

    std::vector<SpectrumRow> rows(points.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (points.size() < threads) threads = static_cast<unsigned>(points.size());

    // Rows are pure functions of their grid point, so any static partition
    // yields the same bits; a single ordered pass then writes them out.
    auto work = [&](unsigned t) {
        for (std::size_t i = t; i < points.size(); i += threads) {
            rows[i] = evaluate_point(points[i], scale_is_density, config.rel_tol);
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

void put_optional(std::ostream& out, const std::optional<double>& v) {
    if (v) out << format_double(*v);
}

const char* status_name(PoleStatus s) {
    return s == PoleStatus::pole ? "pole" : "no_pole";
}

} // namespace

void write_csv(std::ostream& out, const std::vector<SpectrumRow>& rows) {
    out << "v,delta,a,n_e_cm3,omega_tilde_ev,pole_energy_ev,x_offset,f_residual,status\n";
    for (const auto& row : rows) {
        out << format_double(row.v) << ',' << format_double(row.delta) << ','
            << format_double(row.a) << ',';
        put_optional(out, row.n_e_cm3);
        out << ',' << format_double(row.omega_tilde_ev) << ',';
        put_optional(out, row.pole_energy_ev);
        out << ',';
        put_optional(out, row.x_offset);
        out << ',';
        put_optional(out, row.f_residual);
        out << ',' << status_name(row.status) << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<SpectrumRow>& rows) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj["v"] = row.v;
        obj["delta"] = row.delta;
        obj["a"] = row.a;
        obj["n_e_cm3"] = row.n_e_cm3 ? nlohmann::ordered_json(*row.n_e_cm3)
                                     : nlohmann::ordered_json(nullptr);
        obj["omega_tilde_ev"] = row.omega_tilde_ev;
        obj["pole_energy_ev"] = row.pole_energy_ev ? nlohmann::ordered_json(*row.pole_energy_ev)
                                                   : nlohmann::ordered_json(nullptr);
        obj["x_offset"] = row.x_offset ? nlohmann::ordered_json(*row.x_offset)
                                       : nlohmann::ordered_json(nullptr);
        obj["f_residual"] = row.f_residual ? nlohmann::ordered_json(*row.f_residual)
                                           : nlohmann::ordered_json(nullptr);
        obj["status"] = status_name(row.status);
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

} // namespace superray

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "spinflip/spinflip.hpp"

// Command-line front end: single-point rates, parameter sweeps, and
// asymptotic-vs-quadrature validation, emitted as text, CSV or JSON.
//
// Configuration is a flat JSON object mirroring the long flags; flags
// override file values. Output never contains timestamps; a provenance
// header is opt-in via --meta so that identical configs give byte
// identical files.

namespace spinflip::cli {

using nlohmann::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    enum class Axis { temperature, distance, frequency };
    Axis axis = Axis::temperature;
    double start = 0.0;  ///< in axis units: K, um, kHz
    double stop = 0.0;
    int points = 2;
    bool log_scale = false;
};

struct RunConfig {
    std::string material = "nb";  ///< preset name or "custom"
    // custom material description
    std::string kind;  ///< superconductor | normal | perfect
    std::optional<double> lambda_l0_nm;
    std::optional<double> sigma;
    std::optional<double> tc_k;
    std::optional<double> gc_exponent;
    std::optional<double> gap_freq_rad_s;
    std::optional<double> delta_um;
    std::optional<double> delta_ref_khz;

    double temperature_k = 4.2;
    double distance_um = 50.0;
    double frequency_khz = 560.0;
    double spin_weight_parallel = 1.0;
    double spin_weight_perp = 1.0;

    std::string method = "full";  ///< full | asymptotic | both
    std::string output;           ///< text | csv | json; empty = command default
    std::optional<std::string> out_path;
    std::optional<SweepSpec> sweep;

    QuadratureSettings quad;
    bool audit = false;
    bool meta = false;

    // validation grid
    double tolerance = 0.05;
    double t_min = 1.0, t_max = 7.0;
    int t_points = 8;
    double z_min_um = 10.0, z_max_um = 100.0;
    int z_points = 8;
};

// ---------------------------------------------------------------------------
// config <-> flat JSON
// ---------------------------------------------------------------------------

inline const char* axis_name(SweepSpec::Axis a) {
    switch (a) {
        case SweepSpec::Axis::temperature: return "temperature";
        case SweepSpec::Axis::distance: return "distance";
        case SweepSpec::Axis::frequency: return "frequency";
    }
    return "?";
}

inline SweepSpec::Axis axis_from_name(const std::string& s) {
    if (s == "temperature") return SweepSpec::Axis::temperature;
    if (s == "distance") return SweepSpec::Axis::distance;
    if (s == "frequency") return SweepSpec::Axis::frequency;
    throw ConfigError("unknown sweep axis: " + s);
}

inline json config_to_json(const RunConfig& c) {
    json j;
    j["material"] = c.material;
    if (!c.kind.empty()) j["kind"] = c.kind;
    auto put = [&j](const char* key, const std::optional<double>& v) {
        if (v) j[key] = *v;
    };
    put("lambda_l0_nm", c.lambda_l0_nm);
    put("sigma", c.sigma);
    put("tc_k", c.tc_k);
    put("gc_exponent", c.gc_exponent);
    put("gap_freq_rad_s", c.gap_freq_rad_s);
    put("delta_um", c.delta_um);
    put("delta_ref_khz", c.delta_ref_khz);
    j["temperature_k"] = c.temperature_k;
    j["distance_um"] = c.distance_um;
    j["frequency_khz"] = c.frequency_khz;
    j["spin_weight_parallel"] = c.spin_weight_parallel;
    j["spin_weight_perp"] = c.spin_weight_perp;
    j["method"] = c.method;
    if (!c.output.empty()) j["output"] = c.output;
    if (c.out_path) j["out"] = *c.out_path;
    if (c.sweep) {
        j["sweep_axis"] = axis_name(c.sweep->axis);
        j["sweep_start"] = c.sweep->start;
        j["sweep_stop"] = c.sweep->stop;
        j["sweep_points"] = c.sweep->points;
        j["sweep_scale"] = c.sweep->log_scale ? "log" : "linear";
    }
    j["rel_tol"] = c.quad.rel_tol;
    j["abs_tol"] = c.quad.abs_tol;
    j["max_subdivisions"] = c.quad.max_subdivisions;
    j["tail_cutoff"] = c.quad.tail_exponent_cutoff;
    j["audit"] = c.audit;
    j["meta"] = c.meta;
    j["tolerance"] = c.tolerance;
    j["t_min"] = c.t_min;
    j["t_max"] = c.t_max;
    j["t_points"] = c.t_points;
    j["z_min_um"] = c.z_min_um;
    j["z_max_um"] = c.z_max_um;
    j["z_points"] = c.z_points;
    return j;
}

inline RunConfig config_from_json(const json& doc) {
    // accept either a flat config or a previously emitted output document
    const json& j = (doc.is_object() && doc.contains("config")) ? doc.at("config") : doc;
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    static const std::vector<std::string> known = {
        "material", "kind", "lambda_l0_nm", "sigma", "tc_k", "gc_exponent", "gap_freq_rad_s",
        "delta_um", "delta_ref_khz", "temperature_k", "distance_um", "frequency_khz",
        "spin_weight_parallel", "spin_weight_perp", "method", "output", "out", "sweep_axis",
        "sweep_start", "sweep_stop", "sweep_points", "sweep_scale", "rel_tol", "abs_tol",
        "max_subdivisions", "tail_cutoff", "audit", "meta", "tolerance", "t_min", "t_max",
        "t_points", "z_min_um", "z_max_um", "z_points"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw ConfigError("unknown config key: " + it.key());
    }

    RunConfig c;
    auto get = [&j](const char* key, auto& target) {
        if (j.contains(key)) target = j.at(key).template get<std::decay_t<decltype(target)>>();
    };
    auto get_opt = [&j](const char* key, std::optional<double>& target) {
        if (j.contains(key)) target = j.at(key).get<double>();
    };
    get("material", c.material);
    get("kind", c.kind);
    get_opt("lambda_l0_nm", c.lambda_l0_nm);
    get_opt("sigma", c.sigma);
    get_opt("tc_k", c.tc_k);
    get_opt("gc_exponent", c.gc_exponent);
    get_opt("gap_freq_rad_s", c.gap_freq_rad_s);
    get_opt("delta_um", c.delta_um);
    get_opt("delta_ref_khz", c.delta_ref_khz);
    get("temperature_k", c.temperature_k);
    get("distance_um", c.distance_um);
    get("frequency_khz", c.frequency_khz);
    get("spin_weight_parallel", c.spin_weight_parallel);
    get("spin_weight_perp", c.spin_weight_perp);
    get("method", c.method);
    get("output", c.output);
    if (j.contains("out")) c.out_path = j.at("out").get<std::string>();
    if (j.contains("sweep_axis")) {
        SweepSpec s;
        s.axis = axis_from_name(j.at("sweep_axis").get<std::string>());
        if (j.contains("sweep_start")) s.start = j.at("sweep_start").get<double>();
        if (j.contains("sweep_stop")) s.stop = j.at("sweep_stop").get<double>();
        if (j.contains("sweep_points")) s.points = j.at("sweep_points").get<int>();
        if (j.contains("sweep_scale")) {
            const std::string scale = j.at("sweep_scale").get<std::string>();
            if (scale != "linear" && scale != "log")
                throw ConfigError("sweep_scale must be linear or log");
            s.log_scale = scale == "log";
        }
        c.sweep = s;
    } else if (j.contains("sweep_start") || j.contains("sweep_stop") ||
               j.contains("sweep_points") || j.contains("sweep_scale")) {
        throw ConfigError("sweep_* keys require sweep_axis");
    }
    get("rel_tol", c.quad.rel_tol);
    get("abs_tol", c.quad.abs_tol);
    get("max_subdivisions", c.quad.max_subdivisions);
    get("tail_cutoff", c.quad.tail_exponent_cutoff);
    get("audit", c.audit);
    get("meta", c.meta);
    get("tolerance", c.tolerance);
    get("t_min", c.t_min);
    get("t_max", c.t_max);
    get("t_points", c.t_points);
    get("z_min_um", c.z_min_um);
    get("z_max_um", c.z_max_um);
    get("z_points", c.z_points);
    return c;
}

inline RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error: " + std::string(e.what()));
    }
    return config_from_json(doc);
}

// ---------------------------------------------------------------------------
// config -> domain objects
// ---------------------------------------------------------------------------

inline Material resolve_material(const RunConfig& c) {
    if (c.material != "custom") {
        if (!c.kind.empty() || c.lambda_l0_nm || c.sigma || c.tc_k || c.delta_um)
            throw ConfigError("custom material parameters require material = custom");
        try {
            return material_preset(c.material);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    try {
        if (c.kind == "superconductor") {
            if (!c.lambda_l0_nm || !c.sigma || !c.tc_k)
                throw ConfigError("custom superconductor needs lambda_l0_nm, sigma, tc_k");
            std::optional<double> gap;
            if (c.gap_freq_rad_s) gap = *c.gap_freq_rad_s;
            Material m = Material::superconductor(*c.lambda_l0_nm * 1e-9, *c.sigma, *c.tc_k,
                                                  c.gc_exponent.value_or(4.0), gap);
            m.name = "custom";
            return m;
        }
        if (c.kind == "normal") {
            Material m = Material::perfect_conductor();
            if (c.delta_um) {
                m = Material::normal_metal_from_skin_depth(
                    *c.delta_um * 1e-6, c.delta_ref_khz.value_or(c.frequency_khz) * 1e3);
            } else if (c.sigma) {
                m = Material::normal_metal(*c.sigma);
            } else {
                throw ConfigError("custom normal metal needs sigma or delta_um");
            }
            m.name = "custom";
            return m;
        }
        if (c.kind == "perfect") {
            Material m = Material::perfect_conductor();
            m.name = "custom";
            return m;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("material = custom requires kind = superconductor | normal | perfect");
}

inline Scenario resolve_scenario(const RunConfig& c, const Material& m) {
    try {
        TransitionSpec t(c.frequency_khz * 1e3, c.spin_weight_parallel, c.spin_weight_perp);
        return Scenario(t, c.distance_um * 1e-6, c.temperature_k, m);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

// ---------------------------------------------------------------------------
// formatting
// ---------------------------------------------------------------------------

/// Scientific notation with 12 significant digits; empty for non-finite or
/// unset values (spreadsheet safe).
inline std::string csv_number(double v) {
    if (!std::isfinite(v)) return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

inline std::string csv_number(const std::optional<double>& v) {
    return v ? csv_number(*v) : std::string{};
}

inline constexpr const char* kCsvHeader =
    "axis_value,temperature_K,distance_m,frequency_hz,material,method,n_th,eps_re,eps_im,"
    "lambda_L_m,skin_depth_m,I_par,I_perp,gamma0_per_s,gamma_slab_per_s,gamma_total_per_s,"
    "tau_s,rel_err,status";

/// One evaluated sweep row.
struct Row {
    std::optional<double> axis_value;  ///< SI units of the swept axis
    double temperature_K = 0.0;
    double distance_m = 0.0;
    double frequency_hz = 0.0;
    std::string material;
    std::string method;
    std::optional<RateBreakdown> rate;
    std::optional<MediumResponse> medium;
    std::string status = "ok";  ///< ok | quadrature-failure | error
};

inline std::string csv_row(const Row& r) {
    std::string s;
    auto field = [&s](const std::string& v) {
        s += v;
        s += ',';
    };
    field(csv_number(r.axis_value));
    field(csv_number(r.temperature_K));
    field(csv_number(r.distance_m));
    field(csv_number(r.frequency_hz));
    field(r.material);
    field(r.method);
    if (r.rate) {
        const RateBreakdown& b = *r.rate;
        field(csv_number(b.n_th));
        if (r.medium && !r.medium->slab.perfect_mirror) {
            field(csv_number(r.medium->slab.epsilon.real()));
            field(csv_number(r.medium->slab.epsilon.imag()));
        } else {
            field({});
            field({});
        }
        field(csv_number(r.medium ? r.medium->lambda_L_m : infinity));
        field(csv_number(r.medium ? r.medium->skin_depth_m : infinity));
        field(csv_number(b.i_par));
        field(csv_number(b.i_perp));
        field(csv_number(b.gamma0));
        field(csv_number(b.gamma_slab));
        field(csv_number(b.gamma_total));
        field(csv_number(b.tau));
        field(csv_number(b.error_estimate));
    } else {
        for (int i = 0; i < 13; ++i) field({});
    }
    s += r.status;
    return s;
}

inline json breakdown_to_json(const RateBreakdown& b) {
    json j;
    j["gamma0_per_s"] = b.gamma0;
    j["i_par"] = b.i_par ? json(*b.i_par) : json(nullptr);
    j["i_perp"] = b.i_perp ? json(*b.i_perp) : json(nullptr);
    j["gamma_slab_per_s"] = b.gamma_slab;
    j["n_th"] = b.n_th;
    j["gamma_total_per_s"] = b.gamma_total;
    j["tau_s"] = b.tau;
    j["method"] = b.method == RateMethod::full_quadrature ? "full" : "asymptotic";
    j["rel_err"] = b.error_estimate;
    j["converged"] = b.converged;
    return j;
}

inline json medium_to_json(const MediumResponse& m) {
    json j;
    j["ns_fraction"] = m.ns_fraction;
    j["nn_fraction"] = m.nn_fraction;
    j["lambda_L_m"] = std::isfinite(m.lambda_L_m) ? json(m.lambda_L_m) : json(nullptr);
    j["sigma_n"] = std::isfinite(m.sigma_n) ? json(m.sigma_n) : json(nullptr);
    j["skin_depth_m"] = std::isfinite(m.skin_depth_m) ? json(m.skin_depth_m) : json(nullptr);
    if (m.slab.perfect_mirror) {
        j["perfect_mirror"] = true;
    } else {
        j["perfect_mirror"] = false;
        j["eps_re"] = m.slab.epsilon.real();
        j["eps_im"] = m.slab.epsilon.imag();
    }
    return j;
}

inline json validity_to_json(const ValidityReport& rep) {
    json arr = json::array();
    for (const auto& c : rep.checks) {
        json j;
        j["name"] = c.name;
        j["applicable"] = c.applicable;
        j["ratio"] = std::isfinite(c.ratio) ? json(c.ratio) : json(nullptr);
        j["threshold"] = c.threshold;
        j["passed"] = c.passed;
        arr.push_back(std::move(j));
    }
    return arr;
}

// ---------------------------------------------------------------------------
// row evaluation
// ---------------------------------------------------------------------------

inline void audit_row(const Row& r) {
    if (!r.rate) return;
    const RateBreakdown& b = *r.rate;
    const double reassembled = (b.gamma0 + b.gamma_slab) * (b.n_th + 1.0);
    if (reassembled != b.gamma_total)
        throw std::logic_error("audit: gamma_total != (gamma0 + gamma_slab)(n_th + 1)");
    if (!(b.gamma_total > 0.0)) throw std::logic_error("audit: gamma_total <= 0");
    if (std::abs(b.tau * b.gamma_total - 1.0) > 1e-12)
        throw std::logic_error("audit: tau * gamma_total != 1");
}

inline Row evaluate_row(const RunConfig& c, const Material& material,
                        std::optional<double> axis_value_si, double temperature_K,
                        double distance_m, double frequency_hz, bool asymptotic) {
    Row row;
    row.axis_value = axis_value_si;
    row.temperature_K = temperature_K;
    row.distance_m = distance_m;
    row.frequency_hz = frequency_hz;
    row.material = material.name;
    row.method = asymptotic ? "asymptotic" : "full";
    try {
        TransitionSpec t(frequency_hz, c.spin_weight_parallel, c.spin_weight_perp);
        Scenario s(t, distance_m, temperature_K, material);
        row.medium = medium_response(material, temperature_K, angular_frequency(t));
        row.rate = asymptotic ? asymptotic_rate(s) : full_rate(s, c.quad);
        if (!row.rate->converged) {
            row.status = "quadrature-failure";
        }
    } catch (const std::exception&) {
        row.rate.reset();
        row.status = "error";
    }
    // the audit is a tripwire: a violated identity must escape, not become
    // a row status
    if (c.audit) audit_row(row);
    return row;
}

inline std::vector<double> sweep_values(const SweepSpec& s) {
    if (s.points < 2) throw ConfigError("sweep_points must be >= 2");
    if (!(s.start < s.stop)) throw ConfigError("sweep_start must be < sweep_stop");
    if (s.log_scale && !(s.start > 0.0)) throw ConfigError("log sweep requires start > 0");
    std::vector<double> v(static_cast<std::size_t>(s.points));
    if (s.log_scale) {
        const double la = std::log(s.start), lb = std::log(s.stop);
        for (int i = 0; i < s.points; ++i)
            v[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (s.points - 1));
    } else {
        for (int i = 0; i < s.points; ++i)
            v[static_cast<std::size_t>(i)] = s.start + (s.stop - s.start) * i / (s.points - 1);
    }
    return v;
}

/// Evaluate all sweep rows; rows are independent, so chunks run on worker
/// threads, and the result is assembled in axis order regardless of
/// completion order.
inline std::vector<Row> evaluate_sweep(const RunConfig& c, const Material& material) {
    if (!c.sweep) throw ConfigError("sweep requires sweep_axis/start/stop/points");
    const SweepSpec& spec = *c.sweep;
    const std::vector<double> values = sweep_values(spec);

    std::vector<bool> methods;  // false = full, true = asymptotic
    if (c.method == "full") methods = {false};
    else if (c.method == "asymptotic") methods = {true};
    else if (c.method == "both") methods = {false, true};
    else throw ConfigError("method must be full | asymptotic | both");

    struct Task {
        std::optional<double> axis_si;
        double T, z, nu;
        bool asym;
    };
    std::vector<Task> tasks;
    tasks.reserve(values.size() * methods.size());
    for (double v : values) {
        double T = c.temperature_k;
        double z = c.distance_um * 1e-6;
        double nu = c.frequency_khz * 1e3;
        double axis_si = 0.0;
        switch (spec.axis) {
            case SweepSpec::Axis::temperature: T = axis_si = v; break;
            case SweepSpec::Axis::distance: z = axis_si = v * 1e-6; break;
            case SweepSpec::Axis::frequency: nu = axis_si = v * 1e3; break;
        }
        for (bool asym : methods) tasks.push_back({axis_si, T, z, nu, asym});
    }

    std::vector<Row> rows(tasks.size());
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              (tasks.size() + 7) / 8);
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const Task& t = tasks[i];
            rows[i] = evaluate_row(c, material, t.axis_si, t.T, t.z, t.nu, t.asym);
        }
        return rows;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < tasks.size(); i += workers) {
                const Task& t = tasks[i];
                rows[i] = evaluate_row(c, material, t.axis_si, t.T, t.z, t.nu, t.asym);
            }
        }));
    }
    for (auto& f : futures) f.get();
    return rows;
}

// ---------------------------------------------------------------------------
// commands; each returns the process exit code
// ---------------------------------------------------------------------------

inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceExceeded = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitQuadratureFailure = 3;

inline void write_output(const RunConfig& c, const std::string& text) {
    if (c.out_path) {
        std::ofstream out(*c.out_path, std::ios::binary);
        if (!out) throw ConfigError("cannot open output file: " + *c.out_path);
        out << text;
    } else {
        std::fputs(text.c_str(), stdout);
    }
}

inline std::string meta_header(const RunConfig& c, char comment = '#') {
    if (!c.meta) return {};
    std::string s;
    s += comment;
    s += " spinflip sweep; config: ";
    s += config_to_json(c).dump();
    s += '\n';
    return s;
}

inline std::string render_rate_text(const RunConfig& c, const Material& material,
                                    const std::vector<Row>& rows) {
    const Scenario s = resolve_scenario(c, material);
    const double omega = angular_frequency(s.transition);
    const MediumResponse medium = medium_response(material, s.temperature_K, omega);
    const ValidityReport validity = validity_report(s);

    std::ostringstream os;
    os.precision(12);
    os << "scenario: material=" << material.name << " T=" << s.temperature_K
       << " K  z=" << s.distance_m << " m  nu=" << s.transition.frequency_hz << " Hz\n";
    os << "medium: n_s/n0=" << medium.ns_fraction << "  lambda_L=" << medium.lambda_L_m
       << " m  sigma_n=" << medium.sigma_n << " S/m  delta=" << medium.skin_depth_m << " m\n";
    if (medium.slab.perfect_mirror)
        os << "medium: perfect mirror (r_s=-1, r_p=+1)\n";
    else
        os << "medium: eps = " << medium.slab.epsilon.real() << " + "
           << medium.slab.epsilon.imag() << "i\n";
    for (const auto& chk : validity.checks) {
        os << "check " << chk.name << ": ";
        if (!chk.applicable)
            os << "not applicable\n";
        else
            os << "ratio=" << chk.ratio << " threshold=" << chk.threshold
               << (chk.passed ? "  pass" : "  WARN") << "\n";
    }

    for (const Row& r : rows) {
        if (!r.rate) {
            os << "method=" << r.method << "  (not applicable to this material)\n";
            continue;
        }
        const RateBreakdown& b = *r.rate;
        os << "method=" << r.method << "\n";
        os << "  gamma0      = " << b.gamma0 << " 1/s\n";
        if (b.i_par) os << "  I_par       = " << *b.i_par << "\n";
        if (b.i_perp) os << "  I_perp      = " << *b.i_perp << "\n";
        os << "  gamma_slab  = " << b.gamma_slab << " 1/s\n";
        os << "  n_th        = " << b.n_th << "\n";
        os << "  gamma_total = " << b.gamma_total << " 1/s\n";
        os << "  tau         = " << b.tau << " s\n";
        os << "  rel_err     = " << b.error_estimate
           << (b.converged ? "" : "  (no convergence)") << "\n";
    }
    return os.str();
}

inline int cmd_rate(const RunConfig& c) {
    if (c.sweep) throw ConfigError("rate does not take a sweep; use the sweep command");
    const Material material = resolve_material(c);
    const std::string output = c.output.empty() ? "text" : c.output;

    std::vector<bool> methods;
    if (c.method == "full") methods = {false};
    else if (c.method == "asymptotic") methods = {true};
    else if (c.method == "both") methods = {false, true};
    else throw ConfigError("method must be full | asymptotic | both");

    std::vector<Row> rows;
    for (bool asym : methods)
        rows.push_back(evaluate_row(c, material, std::nullopt, c.temperature_k,
                                    c.distance_um * 1e-6, c.frequency_khz * 1e3, asym));

    int exit_code = kExitOk;
    for (const Row& r : rows) {
        if (r.status == "error") exit_code = std::max(exit_code, kExitConfigError);
        else if (r.status != "ok") exit_code = kExitQuadratureFailure;
    }

    if (output == "text") {
        write_output(c, render_rate_text(c, material, rows));
        return exit_code;
    }
    if (output == "csv") {
        std::string text = meta_header(c);
        text += kCsvHeader;
        text += '\n';
        for (const Row& r : rows) {
            text += csv_row(r);
            text += '\n';
        }
        write_output(c, text);
        return exit_code;
    }
    if (output == "json") {
        json doc;
        doc["config"] = config_to_json(c);
        const Scenario s = resolve_scenario(c, material);
        doc["medium"] = medium_to_json(
            medium_response(material, c.temperature_k, angular_frequency(s.transition)));
        doc["validity"] = validity_to_json(validity_report(s));
        json results = json::array();
        for (const Row& r : rows) {
            json jr;
            jr["status"] = r.status;
            jr["method"] = r.method;
            if (r.rate) jr["result"] = breakdown_to_json(*r.rate);
            results.push_back(std::move(jr));
        }
        doc["results"] = std::move(results);
        write_output(c, doc.dump(2) + "\n");
        return exit_code;
    }
    throw ConfigError("output must be text | csv | json");
}

inline int cmd_sweep(const RunConfig& c) {
    const Material material = resolve_material(c);
    const std::vector<Row> rows = evaluate_sweep(c, material);

    std::size_t ok_rows = 0;
    for (const Row& r : rows)
        if (r.status == "ok") ++ok_rows;
    const int exit_code = ok_rows > 0 ? kExitOk : kExitQuadratureFailure;

    const std::string output = c.output.empty() ? "csv" : c.output;
    if (output == "csv") {
        std::string text = meta_header(c);
        text += kCsvHeader;
        text += '\n';
        for (const Row& r : rows) {
            text += csv_row(r);
            text += '\n';
        }
        write_output(c, text);
        return exit_code;
    }
    if (output == "json") {
        json doc;
        doc["config"] = config_to_json(c);
        json jrows = json::array();
        for (const Row& r : rows) {
            json jr;
            jr["axis_value"] = r.axis_value ? json(*r.axis_value) : json(nullptr);
            jr["temperature_k"] = r.temperature_K;
            jr["distance_m"] = r.distance_m;
            jr["frequency_hz"] = r.frequency_hz;
            jr["material"] = r.material;
            jr["method"] = r.method;
            jr["status"] = r.status;
            if (r.rate) jr["result"] = breakdown_to_json(*r.rate);
            if (r.medium) jr["medium"] = medium_to_json(*r.medium);
            jrows.push_back(std::move(jr));
        }
        doc["rows"] = std::move(jrows);
        write_output(c, doc.dump(2) + "\n");
        return exit_code;
    }
    throw ConfigError("sweep output must be csv | json");
}

inline int cmd_validate(const RunConfig& c) {
    const Material material = resolve_material(c);
    if (material.kind != MaterialKind::superconductor)
        throw ConfigError("validate requires a superconductor material");
    if (c.t_points < 1 || c.z_points < 1) throw ConfigError("grid points must be >= 1");
    if (!(c.t_min <= c.t_max) || !(c.z_min_um <= c.z_max_um))
        throw ConfigError("grid bounds must be ordered");

    struct Cell {
        double T, z, deviation;
        bool validity_ok;
    };
    std::vector<Cell> cells;
    double max_dev = 0.0, sum_dev = 0.0;
    for (int i = 0; i < c.t_points; ++i) {
        const double T = c.t_points == 1
                             ? c.t_min
                             : c.t_min + (c.t_max - c.t_min) * i / (c.t_points - 1);
        for (int jz = 0; jz < c.z_points; ++jz) {
            const double z_um = c.z_points == 1 ? c.z_min_um
                                                : c.z_min_um + (c.z_max_um - c.z_min_um) * jz /
                                                                   (c.z_points - 1);
            TransitionSpec t(c.frequency_khz * 1e3, c.spin_weight_parallel,
                             c.spin_weight_perp);
            Scenario s(t, z_um * 1e-6, T, material);
            const AsymptoticValidation v = validate_asymptotic(s, c.quad);
            cells.push_back({T, z_um * 1e-6, v.relative_deviation, v.validity.all_passed()});
            max_dev = std::max(max_dev, v.relative_deviation);
            sum_dev += v.relative_deviation;
        }
    }
    const double mean_dev = sum_dev / static_cast<double>(cells.size());
    const bool pass = max_dev <= c.tolerance;

    const std::string output = c.output.empty() ? "text" : c.output;
    if (output == "json") {
        json doc;
        doc["config"] = config_to_json(c);
        json grid = json::array();
        for (const auto& cell : cells) {
            json jc;
            jc["temperature_k"] = cell.T;
            jc["distance_m"] = cell.z;
            jc["deviation"] = cell.deviation;
            jc["validity_ok"] = cell.validity_ok;
            grid.push_back(std::move(jc));
        }
        doc["grid"] = std::move(grid);
        doc["max_deviation"] = max_dev;
        doc["mean_deviation"] = mean_dev;
        doc["tolerance"] = c.tolerance;
        doc["pass"] = pass;
        write_output(c, doc.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os.precision(6);
        os << "asymptotic vs full quadrature, material=" << material.name << "\n";
        for (const auto& cell : cells)
            os << "  T=" << cell.T << " K  z=" << cell.z * 1e6 << " um  deviation="
               << cell.deviation << (cell.validity_ok ? "" : "  [validity WARN]") << "\n";
        os << "max deviation  = " << max_dev << "\n";
        os << "mean deviation = " << mean_dev << "\n";
        os << "tolerance      = " << c.tolerance << (pass ? "  PASS" : "  FAIL") << "\n";
        write_output(c, os.str());
    }
    return pass ? kExitOk : kExitToleranceExceeded;
}

inline int cmd_presets(const RunConfig& c) {
    const std::string output = c.output.empty() ? "text" : c.output;
    if (output == "json") {
        json arr = json::array();
        for (const auto& m : material_presets()) {
            json j;
            j["name"] = m.name;
            switch (m.kind) {
                case MaterialKind::superconductor:
                    j["kind"] = "superconductor";
                    j["lambda_l0_nm"] = m.lambda_L0_m * 1e9;
                    j["sigma"] = m.sigma_normal;
                    j["tc_k"] = m.tc_K;
                    j["gc_exponent"] = m.gc_exponent;
                    break;
                case MaterialKind::normal_metal:
                    j["kind"] = "normal";
                    j["sigma"] = m.sigma;
                    break;
                case MaterialKind::perfect_conductor:
                    j["kind"] = "perfect";
                    break;
            }
            arr.push_back(std::move(j));
        }
        write_output(c, arr.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    for (const auto& m : material_presets()) {
        os << m.name << ": ";
        switch (m.kind) {
            case MaterialKind::superconductor:
                os << "superconductor, lambda_L(0)=" << m.lambda_L0_m * 1e9
                   << " nm, sigma=" << m.sigma_normal << " S/m, T_c=" << m.tc_K
                   << " K, exponent=" << m.gc_exponent;
                break;
            case MaterialKind::normal_metal:
                os << "normal metal, sigma=" << m.sigma << " S/m";
                break;
            case MaterialKind::perfect_conductor:
                os << "perfect conductor";
                break;
        }
        os << "\n";
    }
    write_output(c, os.str());
    return kExitOk;
}

}  // namespace spinflip::cli

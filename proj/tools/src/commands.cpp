#include "preeq/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace preeq::cli {

namespace {

using json = nlohmann::json;

double to_db(Complex v) { return 20.0 * std::log10(std::abs(v)); }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json poles_json(LinkPoles p) { return {{"x_hz", p.x}, {"y_hz", p.y}}; }

json components_json(const EqualizerParams& p) {
    json out;
    if (p.stage1_present()) {
        out["r1"] = *p.r1;
        out["l_e"] = p.l_e;
    } else {
        out["r1"] = "bypass";
        out["l_e"] = nullptr;
    }
    // A first-order design reports R2 = 0; the sentinel marks a fully bypassed equalizer.
    if (p.stage2_present()) {
        out["r2"] = p.r2;
        out["c_e"] = p.c_e;
    } else {
        out["r2"] = p.stage1_present() ? json(0.0) : json("short");
        out["c_e"] = nullptr;
    }
    return out;
}

json row_json(const SweepRow& r) {
    return {
        {"h", r.h},
        {"regime", std::string(to_string(r.regime))},
        {"x_closed", r.x_closed},
        {"y_closed", r.y_closed},
        {"x_oracle", r.x_oracle},
        {"y_oracle", r.y_oracle},
        {"c_closed", r.c_closed},
        {"c_refined", r.c_refined},
        {"c_oracle", r.c_oracle},
        {"c_bce", r.c_bce},
        {"c_noeq", r.c_noeq},
        {"bandwidth_opt", r.bandwidth_opt},
    };
}

RunConfig with_h(RunConfig cfg, std::optional<double> h) {
    if (h) {
        cfg.link.h = *h;
        for (const auto& problem : violations(cfg)) {
            if (problem.rfind("h ", 0) == 0) throw ConfigError("--h: " + problem);
        }
    }
    return cfg;
}

SweepResult run_sweep(const RunConfig& cfg) {
    const LinkParams link = linearize(cfg.link);
    const LedModel led = derive_led_model(cfg.led, cfg.link.r_g);
    const std::vector<double> hs = sweep_values(cfg.sweep);
    return sweep_attenuation(link, led, hs, cfg.grid);
}

void write_csv_row(std::ostream& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out << ',';
        out << c;
        first = false;
    }
    out << '\n';
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

json cmd_design(const RunConfig& base, std::optional<double> h_override) {
    const RunConfig cfg = with_h(base, h_override);
    const LinkParams link = linearize(cfg.link);
    const LedModel led = derive_led_model(cfg.led, cfg.link.r_g);
    const DesignResult d = optimal_design(link, led);

    return {
        {"h", link.h},
        {"regime", std::string(to_string(d.regime))},
        {"alpha", d.alpha},
        {"thresholds", {{"h1", d.thresholds.h1}, {"h2", d.thresholds.h2}}},
        {"poles_closed", poles_json(d.poles_closed)},
        {"poles_refined", poles_json(d.poles_refined)},
        {"x_unclipped_hz", number_or_null(d.x_unclipped)},
        {"components_closed", components_json(d.params_closed)},
        {"components_refined", components_json(d.params_refined)},
        {"bandwidth_hz", analytic_bandwidth(d.poles_refined)},
        {"bandwidth_closed_hz", analytic_bandwidth(d.poles_closed)},
        {"k_c", end_to_end_gain(link, led, d.poles_refined)},
        {"capacity_bps",
         {{"closed", d.capacity_closed}, {"refined", d.capacity_refined}, {"formula", d.capacity_formula}}},
        {"led",
         {{"f_p1_hz", led.f_p1}, {"f_p2_hz", led.f_p2}, {"k", led.k}, {"poles_swapped", led.poles_swapped}}},
        {"conventions",
         {{"gain_convention", std::string(to_string(cfg.link.gain_convention))},
          {"k_pa", link.k_pa},
          {"k_lna", link.k_lna},
          {"n0_w_per_hz", link.n0},
          {"mu", link.mu},
          {"resp_led", link.resp_led},
          {"resp_pd", link.resp_pd},
          {"r_g", link.r_g}}},
    };
}

void cmd_response(const RunConfig& base, int points, double f_max, std::ostream& out,
                  std::optional<double> h_override) {
    if (points < 2) throw ConfigError("--points must be at least 2");
    if (!(f_max > 0.0) || !std::isfinite(f_max)) throw ConfigError("--fmax must be positive");

    const RunConfig cfg = with_h(base, h_override);
    const LinkParams link = linearize(cfg.link);
    const LedModel led = derive_led_model(cfg.led, cfg.link.r_g);
    const DesignResult d = optimal_design(link, led);
    const EqualizerModel eq = derive_equalizer_model(d.params_refined, cfg.link.r_g);

    write_csv_row(out, {"f_hz", "led_db", "eq_db", "link_db"});
    for (double f : log_spaced(f_max * 1e-4, f_max, points)) {
        write_csv_row(out, {format_number(f), format_number(to_db(led_s21(led, f))),
                            format_number(to_db(equalizer_s21(eq, f))),
                            format_number(to_db(link_response_cascade(f, link, led, eq)))});
    }
}

SweepResult cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const SweepResult s = run_sweep(cfg);
    write_csv_row(out, {"h", "regime", "x_closed_hz", "y_closed_hz", "x_oracle_hz", "y_oracle_hz", "c_closed",
                        "c_refined", "c_oracle", "c_bce", "c_noeq", "bandwidth_opt_hz"});
    for (const SweepRow& r : s.rows) {
        write_csv_row(out, {format_number(r.h), std::string(to_string(r.regime)), format_number(r.x_closed),
                            format_number(r.y_closed), format_number(r.x_oracle), format_number(r.y_oracle),
                            format_number(r.c_closed), format_number(r.c_refined), format_number(r.c_oracle),
                            format_number(r.c_bce), format_number(r.c_noeq), format_number(r.bandwidth_opt)});
    }
    return s;
}

ValidationReport cmd_validate(const RunConfig& cfg, const NmseLimits& limits) {
    const SweepResult s = run_sweep(cfg);
    const bool pole_ok = s.pole_nmse <= limits.pole;
    const bool capacity_ok = s.capacity_nmse <= limits.capacity;

    json rows = json::array();
    for (const SweepRow& r : s.rows) rows.push_back(row_json(r));

    json report{
        {"points", s.rows.size()},
        {"pole_nmse", {{"value", s.pole_nmse}, {"x", s.pole_nmse_x}, {"y", s.pole_nmse_y},
                       {"limit", limits.pole}, {"pass", pole_ok}}},
        {"capacity_nmse", {{"value", s.capacity_nmse}, {"limit", limits.capacity}, {"pass", capacity_ok}}},
        {"pass", pole_ok && capacity_ok},
        {"rows", rows},
    };
    return {report, pole_ok && capacity_ok};
}

int exit_status(const ValidationReport& v) { return v.passed ? kExitOk : kExitThreshold; }

void cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const SweepResult s = run_sweep(cfg);
    write_csv_row(out, {"h", "regime", "c_cce", "c_bce", "c_noeq", "c_oracle", "bandwidth_cce_hz"});
    for (const SweepRow& r : s.rows) {
        write_csv_row(out, {format_number(r.h), std::string(to_string(r.regime)), format_number(r.c_refined),
                            format_number(r.c_bce), format_number(r.c_noeq), format_number(r.c_oracle),
                            format_number(r.bandwidth_opt)});
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capacity-optimal analog pre-equalizer design for IMDD optical links", "preeq"};
    app.require_subcommand(1);
    // -h is taken by the attenuation flag; help stays on --help.
    app.set_help_flag("--help", "Print this help message and exit");

    std::string config_path;
    std::string out_path;
    std::optional<double> h;
    int points = 400;
    double f_max = 1e10;

    const auto common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON configuration file (defaults used when omitted)");
        cmd->add_option("--out", out_path, "Write output here instead of standard output");
    };

    CLI::App* design = app.add_subcommand("design", "Optimal equalizer design report (JSON)");
    common(design);
    design->add_option("--h", h, "Channel attenuation override");

    CLI::App* response = app.add_subcommand("response", "Frequency response of the optimal design (CSV)");
    common(response);
    response->add_option("--h", h, "Channel attenuation override");
    response->add_option("--points", points, "Number of log-spaced frequencies")->capture_default_str();
    response->add_option("--fmax", f_max, "Highest frequency [Hz]")->capture_default_str();

    CLI::App* sweep = app.add_subcommand("sweep", "Closed form against grid oracle over the h sweep (CSV)");
    common(sweep);
    CLI::App* validate = app.add_subcommand("validate", "NMSE check of the closed forms (JSON, exit 1 on failure)");
    common(validate);
    CLI::App* compare = app.add_subcommand("compare", "CCE, BCE and no-equalizer capacities over the sweep (CSV)");
    common(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
    }

    try {
        const RunConfig cfg = config_path.empty() ? parse_config("{}", "<defaults>") : load_config(config_path);

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) throw ConfigError("cannot open output file '" + out_path + "'");
        }
        std::ostream& sink = out_path.empty() ? out : file;

        if (design->parsed()) {
            sink << cmd_design(cfg, h).dump(2) << '\n';
        } else if (response->parsed()) {
            cmd_response(cfg, points, f_max, sink, h);
        } else if (sweep->parsed()) {
            const SweepResult s = cmd_sweep(cfg, sink);
            err << "pole_nmse=" << format_number(s.pole_nmse) << " (x " << format_number(s.pole_nmse_x) << ", y "
                << format_number(s.pole_nmse_y) << ") capacity_nmse=" << format_number(s.capacity_nmse) << '\n';
        } else if (validate->parsed()) {
            const ValidationReport v = cmd_validate(cfg);
            sink << v.report.dump(2) << '\n';
            if (exit_status(v) != kExitOk) {
                err << "validation failed\n";
                return exit_status(v);
            }
        } else if (compare->parsed()) {
            cmd_compare(cfg, sink);
        }
        sink.flush();
        if (!sink) throw std::runtime_error("failed writing output");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace preeq::cli

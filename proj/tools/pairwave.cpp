// pairwave: tables of Λ(r̃, τ), the steady state, poles of U(k) and trap profiles.
//
//   pairwave lambda-table --r-tilde 1,10,50 --tau 50,100 --out lambda.csv
//   pairwave steady --format jsonl
//   pairwave poles --t 10 --m -3,-2,-1,1,2,3
//   pairwave trap-profile --config trap.json
//   pairwave self-check

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pairwave/cli/commands.hpp"
#include "pairwave/self_check.hpp"

namespace {

struct flag_values {
    std::string config;
    std::optional<std::string> out, format;
    std::optional<double> tol, contour_angle, region_thresh, g;
    std::optional<int> threads;
    std::vector<double> r_tilde, tau, r, t, R;
    std::vector<int> m;
    std::optional<std::string> trap_kind;
    std::optional<double> trap_epsilon, trap_volume, trap_value, trap_margin;
    bool timestamp = false;
};

void add_shared(CLI::App* app, flag_values& f) {
    app->add_option("--config", f.config, "JSON run configuration");
    app->add_option("--out", f.out, "output path (default stdout)");
    app->add_option("--format", f.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    app->add_option("--tol", f.tol, "oracle / solver tolerance");
    app->add_option("--contour-angle", f.contour_angle, "rotation angle of the oracle contour");
    app->add_option("--region-thresh", f.region_thresh, "region-III band constant c");
    app->add_option("--threads", f.threads, "worker threads (default PAIRWAVE_THREADS or all cores)");
    app->add_option("--g", f.g, "coupling 16πaρ0");
    app->add_flag("--timestamp", f.timestamp, "add a generation time to the metadata");
}

pairwave::cli::run_config build_config(const flag_values& f) {
    using namespace pairwave::cli;
    run_config c = f.config.empty() ? run_config{} : load_config(f.config);
    if (f.config.empty()) c.threads = default_threads();
    if (f.out) c.out = *f.out;
    if (f.format) c.format = parse_format(*f.format);
    if (f.tol) c.tol = *f.tol;
    if (f.contour_angle) c.contour_angle = *f.contour_angle;
    if (f.region_thresh) c.region_thresh = *f.region_thresh;
    if (f.threads) c.threads = *f.threads;
    if (f.g) c.g = *f.g;
    if (!f.r_tilde.empty()) c.r_tilde = f.r_tilde;
    if (!f.tau.empty()) c.tau = f.tau;
    if (!f.r.empty()) c.r = f.r;
    if (!f.t.empty()) c.t = f.t;
    if (!f.R.empty()) c.R = f.R;
    if (!f.m.empty()) c.m = f.m;
    if (f.trap_kind) c.trap.kind = *f.trap_kind;
    if (f.trap_epsilon) c.trap.epsilon = *f.trap_epsilon;
    if (f.trap_volume) c.trap.volume = *f.trap_volume;
    if (f.trap_value) c.trap.value = *f.trap_value;
    if (f.trap_margin) c.trap.margin = *f.trap_margin;
    c.timestamp = c.timestamp || f.timestamp;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairwave: pair-excitation kernel tables"};
    app.require_subcommand(1);
    flag_values f;

    auto* lt = app.add_subcommand("lambda-table", "Λ asymptotic vs oracle on an r̃ × τ grid");
    add_shared(lt, f);
    lt->add_option("--r-tilde", f.r_tilde, "scaled distances")->delimiter(',');
    lt->add_option("--tau", f.tau, "scaled times")->delimiter(',');

    auto* st = app.add_subcommand("steady", "steady-state g0(r) with a quadrature cross-check");
    add_shared(st, f);
    st->add_option("--r", f.r, "distances")->delimiter(',');

    auto* po = app.add_subcommand("poles", "poles of U(k) for zero initial data");
    add_shared(po, f);
    po->add_option("--t", f.t, "times")->delimiter(',');
    po->add_option("--m", f.m, "pole indices, nonzero")->delimiter(',');

    auto* tp = app.add_subcommand("trap-profile", "Thomas-Fermi profile and local Λ in a trap");
    add_shared(tp, f);
    tp->add_option("--R", f.R, "radial positions")->delimiter(',');
    tp->add_option("--r", f.r, "relative distances for Λ")->delimiter(',');
    tp->add_option("--t", f.t, "times for Λ")->delimiter(',');
    tp->add_option("--trap-kind", f.trap_kind, "quadratic or constant");
    tp->add_option("--trap-epsilon", f.trap_epsilon, "slowness ε of Ve = ε²|x|²");
    tp->add_option("--trap-volume", f.trap_volume, "volume Ω of the ball");
    tp->add_option("--trap-value", f.trap_value, "value of a constant potential");
    tp->add_option("--trap-margin", f.trap_margin, "minimum φ0²/max φ0² for local Λ");

    auto* sc = app.add_subcommand("self-check", "run the acceptance checks");
    add_shared(sc, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : pairwave::cli::exit_config;
    }

    using namespace pairwave::cli;
    try {
        const run_config c = build_config(f);
        command_output o;
        if (lt->parsed()) o = lambda_table(c);
        else if (st->parsed()) o = steady(c);
        else if (po->parsed()) o = poles(c);
        else if (tp->parsed()) o = trap_profile(c);
        else {
            validate_common(c);
            int code = exit_ok;
            for (const auto& spec : pairwave::acceptance_checks()) {
                const auto r = pairwave::run_check(spec);
                std::printf("%s\n", pairwave::format_check(r).c_str());
                std::fflush(stdout);
                if (!r.pass) code = exit_partial;
            }
            return code;
        }
        if (c.timestamp) {
            const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            o.tab.add_meta("generated_at", buf);
        }
        emit(o, c);
        return o.code;
    } catch (const pairwave::error& e) {
        std::cerr << "pairwave: " << pairwave::errc_name(e.code()) << ": " << e.what() << '\n';
        const auto k = e.code();
        return (k == pairwave::errc::config || k == pairwave::errc::infeasible || k == pairwave::errc::domain) ? exit_config : exit_partial;
    } catch (const std::exception& e) {
        std::cerr << "pairwave: " << e.what() << '\n';
        return exit_partial;
    }
}

// oscm: command line front end for the slotted online crossing laboratory.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "oscm/adversaries.hpp"
#include "oscm/algorithms.hpp"
#include "oscm/harness.hpp"
#include "oscm/io.hpp"
#include "oscm/offline.hpp"
#include "oscm/render.hpp"

namespace fs = std::filesystem;
using namespace oscm;

namespace {

struct OutputOptions {
    std::string report;
    std::string format = "csv";
    bool trace = false;
    std::string svg;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--report", out.report, "Write the report to this file (stdout when omitted)");
    cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--trace", out.trace, "Include the full game trace in the output");
    cmd->add_option("--svg", out.svg, "Render the final layout to this SVG file");
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        io::write_text(path, text);
    }
}

void write_report(const RatioReport& rep, const OutputOptions& out) {
    if (out.format == "json") {
        emit(out.report, io::report_to_json(rep).dump(2) + "\n");
    } else {
        emit(out.report, io::csv_header() + "\n" + io::csv_row(rep) + "\n");
        if (out.trace && rep.trace) {
            const fs::path trace_path =
                out.report.empty() ? fs::path("trace.json") : fs::path(out.report).replace_extension(".trace.json");
            io::write_text(trace_path, io::trace_to_json(*rep.trace).dump(2) + "\n");
            std::cerr << "trace written to " << trace_path.string() << "\n";
        }
    }
    if (!out.svg.empty() && rep.trace) io::write_text(out.svg, render_svg(rep.trace->final_state));
    if (!rep.findings.empty()) std::cerr << rep.findings.size() << " audit finding(s)\n";
}

void print_summary(const RatioReport& rep) {
    std::cerr << rep.algorithm << " vs " << rep.source << " (n=" << rep.n << "): ALG=" << rep.alg_crossings
              << " OPT=" << rep.opt_crossings << (rep.opt_exact ? "" : " (upper bound)")
              << " ratio=" << io::format_ratio(rep.ratio) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slotted online one-sided crossing minimization laboratory"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Play an algorithm on an instance file");
    std::string run_algo = "greedy";
    std::string run_instance;
    OutputOptions run_out;
    run->add_option("--algo", run_algo, "barycenter | greedy | greedy_right | first_fit");
    run->add_option("--instance", run_instance, "Instance JSON file")->required();
    add_output_options(run, run_out);

    // adversary
    auto* adv = app.add_subcommand("adversary", "Play an algorithm against an adversary construction");
    std::string adv_name;
    std::string adv_algo = "greedy";
    int adv_n = 10;
    int adv_rounds = 1;
    OutputOptions adv_out;
    adv->add_option("--name", adv_name, "thm1 | thm2 | fig8")->required()->check(CLI::IsMember({"thm1", "thm2", "fig8"}));
    adv->add_option("--algo", adv_algo, "barycenter | greedy | greedy_right | first_fit");
    adv->add_option("--n", adv_n, "Instance size (thm1, fig8)");
    adv->add_option("--rounds", adv_rounds, "Rounds (thm2)");
    add_output_options(adv, adv_out);

    // opt
    auto* opt = app.add_subcommand("opt", "Exact offline optimum of an instance");
    std::string opt_instance;
    opt->add_option("--instance", opt_instance, "Instance JSON file")->required();

    // audit
    auto* audit = app.add_subcommand("audit", "Replay a game and list invariant violations");
    std::string audit_instance;
    std::string audit_algo = "greedy";
    std::string audit_trace_file;
    bool audit_strict = false;
    audit->add_option("--instance", audit_instance, "Instance JSON file to play");
    audit->add_option("--algo", audit_algo, "Algorithm used with --instance");
    audit->add_option("--trace-file", audit_trace_file, "Audit a stored trace JSON instead");
    audit->add_flag("--strict", audit_strict, "Exit with status 3 when findings exist");

    // bench
    auto* bench = app.add_subcommand("bench", "Sweep random 2-regular instances");
    SweepSpec spec;
    int bench_n = 9;
    bool bench_trace = false;
    std::string bench_report;
    std::string bench_format = "csv";
    bench->add_option("--algo", spec.algorithm, "barycenter | greedy | greedy_right | first_fit");
    bench->add_option("--trials", spec.trials, "Number of instances");
    bench->add_option("--seed", spec.seed, "Master seed");
    bench->add_option("--n", bench_n, "Largest instance size");
    bench->add_option("--n-min", spec.n_min, "Smallest instance size");
    bench->add_option("--threads", spec.threads, "Worker threads (0 = all cores)");
    bench->add_option("--report", bench_report, "Write per-trial rows to this file");
    bench->add_option("--format", bench_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    bench->add_flag("--trace", bench_trace, "Keep traces in the JSON report");

    // render
    auto* render = app.add_subcommand("render", "Draw a layout with propagation arrows as SVG");
    std::string render_instance;
    std::string render_algo = "greedy";
    std::string render_svg_path;
    int render_n = 0;
    int render_steps = -1;
    bool render_no_arrows = false;
    render->add_option("--instance", render_instance, "Instance JSON file to play before drawing");
    render->add_option("--algo", render_algo, "Algorithm used with --instance");
    render->add_option("--n", render_n, "Draw the empty state on n slots instead");
    render->add_option("--steps", render_steps, "Stop after this many requests");
    render->add_option("--svg", render_svg_path, "Output file (stdout when omitted)");
    render->add_flag("--no-arrows", render_no_arrows, "Hide propagation arrows");

    // gen
    auto* gen = app.add_subcommand("gen", "Write a random 2-regular instance");
    int gen_n = 8;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Instance size");
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_option("--instance", gen_out, "Output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const auto inst = io::load_instance(run_instance);
            const auto rep = run_experiment(algorithm_by_name(run_algo), inst, {}, {}, true,
                                            fs::path(run_instance).filename().string());
            auto shown = rep;
            if (!run_out.trace) shown.trace.reset();
            if (!run_out.svg.empty()) io::write_text(run_out.svg, render_svg(rep.trace->final_state));
            write_report(shown, run_out);
            print_summary(rep);
        } else if (*adv) {
            const auto alg = algorithm_by_name(adv_algo);
            RatioReport rep;
            if (adv_name == "thm1") {
                Thm1Adversary a(adv_n);
                rep = run_experiment(alg, a, {}, {}, true);
            } else if (adv_name == "thm2") {
                Thm2Adversary a(adv_rounds);
                rep = run_experiment(alg, a, {}, {}, true);
            } else {
                rep = run_experiment(alg, fig8_instance(adv_n), {}, {}, true, "fig8");
            }
            if (!adv_out.svg.empty()) io::write_text(adv_out.svg, render_svg(rep.trace->final_state));
            auto shown = rep;
            if (!adv_out.trace) shown.trace.reset();
            write_report(shown, adv_out);
            print_summary(rep);
        } else if (*opt) {
            const auto inst = io::load_instance(opt_instance);
            const auto res = brute_force_opt(inst);
            std::cout << "opt " << res.opt_crossings << "\nwitness";
            for (Slot s : res.witness.slot_of) std::cout << ' ' << s;
            std::cout << "\n";
        } else if (*audit) {
            Trace trace;
            if (!audit_trace_file.empty()) {
                trace = io::load_trace(audit_trace_file);
            } else if (!audit_instance.empty()) {
                trace = play(io::load_instance(audit_instance), algorithm_by_name(audit_algo));
            } else {
                std::cerr << "audit needs --instance or --trace-file\n" << audit->help();
                return 2;
            }
            const auto findings = audit_trace(trace);
            std::cout << "steps " << trace.steps.size() << "\nfindings " << findings.size() << "\n";
            for (const auto& f : findings) std::cout << f.step << ' ' << to_string(f.kind) << ' ' << f.detail << "\n";
            if (audit_strict && !findings.empty()) return 3;
        } else if (*bench) {
            spec.n_max = bench_n;
            spec.keep_traces = bench_trace;
            const auto summary = sweep(spec);
            if (bench_format == "json") {
                emit(bench_report, io::sweep_to_json(summary, true).dump(2) + "\n");
            } else {
                emit(bench_report, io::sweep_csv(summary));
            }
            std::cerr << spec.algorithm << ": trials=" << spec.trials << " max_ratio=" << summary.max_ratio
                      << " mean_ratio=" << summary.mean_ratio << " violations=" << summary.violation_count
                      << " errors=" << summary.error_count << "\n";
        } else if (*render) {
            PlacementState state;
            if (!render_instance.empty()) {
                auto inst = io::load_instance(render_instance);
                if (render_steps >= 0 && static_cast<std::size_t>(render_steps) < inst.requests.size()) {
                    inst.requests.resize(static_cast<std::size_t>(render_steps));
                    inst.regularity = Regularity::General;
                }
                state = play(inst, algorithm_by_name(render_algo)).final_state;
            } else if (render_n > 0) {
                state = PlacementState(render_n);
            } else {
                std::cerr << "render needs --instance or --n\n" << render->help();
                return 2;
            }
            RenderSpec rs;
            rs.show_arrows = !render_no_arrows;
            emit(render_svg_path, render_svg(state, rs));
        } else if (*gen) {
            emit(gen_out, io::instance_to_json(random_two_regular(gen_n, gen_seed)).dump(2) + "\n");
        }
    } catch (const Error& e) {
        std::cerr << "oscm: " << to_string(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "oscm: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

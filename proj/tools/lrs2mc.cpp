// Command-line front end: exact reduction of rational linear recurrence
// sequences to ergodic Markov reachability instances, plus the verification
// and analysis commands around it.

#include <CLI11.hpp>

#include <iostream>

#include "lrs2mc/io.hpp"
#include "lrs2mc/pipeline.hpp"

int main(int argc, char** argv) {
    using lrs2mc::PipelineConfig;
    using Command = PipelineConfig::Command;

    CLI::App app{
        "lrs2mc: turn a rational linear recurrence sequence into an ergodic Markov chain "
        "whose reachability behaviour mirrors the sequence's zero/sign pattern, exactly"};
    app.require_subcommand(1);

    PipelineConfig cfg;
    std::string query = "equal";

    const auto add_common = [&](CLI::App* sub, std::size_t n_inputs, const char* input_desc) {
        if (n_inputs > 0)
            sub->add_option("inputs", cfg.inputs, input_desc)
                ->expected(static_cast<int>(n_inputs))
                ->required();
        sub->add_option("--horizon", cfg.horizon, "exact-computation horizon (steps / terms)")
            ->capture_default_str();
        return sub;
    };

    CLI::App* reduce = add_common(app.add_subcommand("reduce", "decompose, window, and reduce an "
                                                               "LRS file; writes instance, "
                                                               "certificate, report, and manifest"),
                                  1, "LRS input file (JSON)");
    reduce->add_option("--query", query, "equal | less | infinitely-often-less")
        ->capture_default_str();
    reduce->add_option("--window-cap", cfg.window_cap, "search cap for the nonzero window")
        ->capture_default_str();
    reduce->add_option("--out", cfg.out, "output directory")->required();

    CLI::App* verify = add_common(
        app.add_subcommand("verify", "re-check an instance/certificate pair by exact computation"),
        2, "instance file, certificate file");
    verify->add_option("--out", cfg.out, "also write the report as JSON");

    CLI::App* eval =
        add_common(app.add_subcommand("eval", "print exact terms u_0..u_horizon of an LRS file"),
                   1, "LRS input file (JSON)");
    eval->add_option("--out", cfg.out, "also write the terms as JSON");

    CLI::App* decompose = add_common(
        app.add_subcommand("decompose", "print the non-degenerate stride decomposition"), 1,
        "LRS input file (JSON)");
    decompose->add_option("--out", cfg.out, "also write the decomposition as JSON");

    CLI::App* reverse = add_common(
        app.add_subcommand("reverse", "recover the LRS behind an instance's difference sequence "
                                      "and decide infinite equality"),
        1, "instance file (JSON)");
    reverse->add_option("--out", cfg.out, "write the recovered LRS as JSON");

    CLI::App* scan = add_common(
        app.add_subcommand("scan", "bounded witness search on an instance (decides nothing when "
                                   "no witness appears)"),
        1, "instance file (JSON)");
    scan->add_option("--out", cfg.out, "also write the scan result as JSON");

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the seeded randomized property suites");
    selftest->add_option("--seed", cfg.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    if (reduce->parsed()) {
        cfg.command = Command::Reduce;
        try {
            cfg.query = lrs2mc::query_kind_from_string(query);
        } catch (const lrs2mc::input_error& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 2;
        }
    } else if (verify->parsed()) {
        cfg.command = Command::Verify;
    } else if (eval->parsed()) {
        cfg.command = Command::Eval;
    } else if (decompose->parsed()) {
        cfg.command = Command::Decompose;
    } else if (reverse->parsed()) {
        cfg.command = Command::Reverse;
    } else if (scan->parsed()) {
        cfg.command = Command::Scan;
    } else {
        cfg.command = Command::Selftest;
    }

    return lrs2mc::run_command(cfg, std::cout, std::cerr);
}
